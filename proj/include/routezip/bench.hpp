#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "routezip/instances.hpp"
#include "routezip/pipeline.hpp"

namespace routezip {

struct BenchRow {
  std::size_t path_id = 0;
  /// A CompressMethod name, or "raw" for the uncompressed baseline (every
  /// edge sent as a via edge).
  std::string method;
  std::size_t path_edges = 0;
  /// |Q| for via edges and combined, anchors for via nodes, |P'| for ch.
  std::size_t repr_size = 0;
  std::size_t payload_bytes = 0;
  std::size_t compress_queries = 0;
  std::size_t decompress_queries = 0;
  double wall_ms = 0.0;
  bool roundtrip_ok = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// One header line, then one tab-separated line per row.
  void write_tsv(std::ostream& out) const;
};

struct BenchConfig {
  NodeId width = 20;
  NodeId height = 20;
  WeightRange weights{1, 100};
  std::uint64_t seed = 1;
  std::size_t paths = 100;
  std::size_t min_length = 1;
  std::size_t max_length = 500;
  std::size_t threads = 1;
  BuildParams ch_params;
};

/// Runs all six methods plus the raw baseline on every path. Rows come out
/// grouped by path, in path order, whatever the thread count. Throws
/// IntegrityError if any roundtrip fails; no row is reported unverified.
BenchReport run_bench(const Graph& g, const Hierarchy& h, const SplitGraph& split,
                      const std::vector<Path>& paths, std::size_t threads = 1);

/// Generates the grid, its hierarchy and split graph, and seeded paths
/// (alternating random walks and perturbed shortest paths), then runs
/// run_bench on them.
BenchReport run_bench(const BenchConfig& config);

/// Seeded benchmark paths on g: even ids are random walks, odd ids
/// perturbed shortest paths, lengths uniform in [min_length, max_length].
std::vector<Path> bench_paths(const Graph& g, std::size_t count, std::size_t min_length,
                              std::size_t max_length, std::uint64_t seed);

}  // namespace routezip
