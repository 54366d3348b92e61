#include "routezip/bench.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "routezip/error.hpp"

namespace routezip {

namespace {

std::size_t repr_size(const RouteMessage& m) {
  return m.method == Method::kViaNodes ? m.nodes.size() : m.arcs.size();
}

std::vector<BenchRow> bench_one(RoutePipeline& pipeline, std::size_t id, const Path& p) {
  std::vector<BenchRow> rows;
  auto run = [&](const std::string& name, auto&& make_message) {
    auto start = std::chrono::steady_clock::now();
    pipeline.reset_queries();
    RouteMessage m = make_message();
    std::size_t compress_queries = pipeline.queries();
    std::vector<std::uint8_t> bytes = encode(m);
    pipeline.reset_queries();
    Path back = pipeline.decompress(decode(bytes));
    std::size_t decompress_queries = pipeline.queries();
    auto stop = std::chrono::steady_clock::now();
    if (back != p) {
      throw IntegrityError("roundtrip failed for path " + std::to_string(id) + " with " + name);
    }
    BenchRow row;
    row.path_id = id;
    row.method = name;
    row.path_edges = p.size();
    row.repr_size = repr_size(m);
    row.payload_bytes = bytes.size();
    row.compress_queries = compress_queries;
    row.decompress_queries = decompress_queries;
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    row.roundtrip_ok = true;
    rows.push_back(row);
  };

  run("raw", [&] {
    RouteMessage m;
    m.method = Method::kViaEdges;
    m.source = p.source();
    m.target = p.target();
    for (const EdgeRef& e : p) m.arcs.push_back({e.tail, e.head, false});
    m.map_version = pipeline.map_version(Method::kViaEdges);
    return m;
  });
  for (CompressMethod method : kAllMethods) {
    run(to_string(method), [&] { return pipeline.compress(method, p); });
  }
  return rows;
}

}  // namespace

void BenchReport::write_tsv(std::ostream& out) const {
  out << "path_id\tmethod\tpath_edges\trepr_size\tpayload_bytes\tcompress_queries\t"
         "decompress_queries\twall_ms\troundtrip_ok\n";
  for (const BenchRow& r : rows) {
    out << r.path_id << '\t' << r.method << '\t' << r.path_edges << '\t' << r.repr_size << '\t'
        << r.payload_bytes << '\t' << r.compress_queries << '\t' << r.decompress_queries << '\t'
        << r.wall_ms << '\t' << (r.roundtrip_ok ? "true" : "false") << '\n';
  }
}

BenchReport run_bench(const Graph& g, const Hierarchy& h, const SplitGraph& split,
                      const std::vector<Path>& paths, std::size_t threads) {
  std::vector<std::vector<BenchRow>> per_path(paths.size());
  std::vector<std::exception_ptr> errors(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    RoutePipeline pipeline(&g, &h, &split);
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      try {
        per_path[i] = bench_one(pipeline, i, paths[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max<std::size_t>(threads, 1);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  BenchReport report;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (BenchRow& row : per_path[i]) report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Path> bench_paths(const Graph& g, std::size_t count, std::size_t min_length,
                              std::size_t max_length, std::uint64_t seed) {
  Rng rng(seed);
  ShortestPathEngine engine(g);
  std::vector<Path> paths;
  paths.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto length = static_cast<std::size_t>(
        uniform(rng, static_cast<std::int64_t>(min_length), static_cast<std::int64_t>(max_length)));
    if (i % 2 == 0) {
      paths.push_back(random_walk(g, length, rng));
    } else {
      auto detours = static_cast<std::size_t>(uniform(rng, 0, 5));
      paths.push_back(perturbed_sp_path(engine, length, detours, rng));
    }
  }
  return paths;
}

BenchReport run_bench(const BenchConfig& config) {
  Graph g = make_grid(config.width, config.height, config.weights, config.seed);
  Hierarchy h = build_hierarchy(g, config.ch_params);
  SplitGraph split = split_non_unique_edges(g);
  std::vector<Path> paths =
      bench_paths(g, config.paths, config.min_length, config.max_length, config.seed + 1);
  return run_bench(g, h, split, paths, config.threads);
}

}  // namespace routezip
