#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "routezip/graph.hpp"
#include "routezip/prefix_search.hpp"
#include "routezip/shortest_path.hpp"

namespace routezip {

/// A path given by its endpoints and the kept via edges; every gap between
/// consecutive anchors is the unique shortest path.
struct ViaEdgeRepr {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<EdgeRef> vias;

  friend bool operator==(const ViaEdgeRepr&, const ViaEdgeRepr&) = default;
};

/// Node-anchored variant, meaningful only on a split graph.
struct ViaNodeRepr {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<NodeId> vias;

  friend bool operator==(const ViaNodeRepr&, const ViaNodeRepr&) = default;
};

// The via_edges_* functions require a valid non-empty path (PathError
// otherwise) and return the same minimal representation; they differ only
// in how many uniqueness queries they issue on `engine`.
ViaEdgeRepr via_edges_linear(ShortestPathEngine& engine, const Path& p);
ViaEdgeRepr via_edges_binary(ShortestPathEngine& engine, const Path& p);
ViaEdgeRepr via_edges_gallop(ShortestPathEngine& engine, const Path& p);
ViaEdgeRepr via_edges(ShortestPathEngine& engine, const Path& p, PrefixSearch search);

/// Largest q in [j-1, k] such that edges j..q of p (1-based) form a unique
/// shortest path. Requires 1 <= j <= k <= |p|.
std::size_t max_prefix_sp_binary(ShortestPathEngine& engine, const Path& p, std::size_t j,
                                 std::size_t k);
std::size_t max_prefix_sp_gallop(ShortestPathEngine& engine, const Path& p, std::size_t j,
                                 std::size_t k);

/// The unique shortest s-t path; empty when s == t. Throws IntegrityError
/// if t is unreachable or the shortest path is not unique.
Path unique_gap(ShortestPathEngine& engine, NodeId s, NodeId t);

/// Stitches unique shortest paths between the anchors. Throws
/// IntegrityError if a gap is unreachable or ambiguous, or a via edge is
/// missing from the graph.
Path decompress_via_edges(ShortestPathEngine& engine, const ViaEdgeRepr& r);

/// Midpoint bookkeeping for split_non_unique_edges. Midpoints are numbered
/// consecutively from the original node count.
class SplitMapping {
 public:
  SplitMapping() = default;
  SplitMapping(NodeId original_node_count, std::vector<EdgeRef> split_edges);

  /// Rebuilds the mapping of a split graph loaded from disk. Every node at
  /// or above original_node_count must have exactly one incoming and one
  /// outgoing edge; FormatError otherwise.
  static SplitMapping recover(const Graph& split_graph, NodeId original_node_count);

  NodeId original_node_count() const { return original_node_count_; }
  const std::vector<EdgeRef>& split_edges() const { return split_edges_; }
  bool is_midpoint(NodeId v) const { return v >= original_node_count_; }
  std::optional<NodeId> midpoint(EdgeRef original) const;
  EdgeRef original_edge(NodeId midpoint) const;

  /// Replaces every split original edge by its two halves.
  Path lift(const Path& original) const;
  /// Inverse of lift. Throws IntegrityError on a dangling half edge.
  Path project(const Path& split) const;

 private:
  NodeId original_node_count_ = 0;
  std::vector<EdgeRef> split_edges_;
  std::unordered_map<std::uint64_t, NodeId> midpoint_of_;
};

struct SplitGraph {
  Graph graph;
  SplitMapping mapping;
};

/// Doubles every weight, then replaces each edge that is not the unique
/// shortest path between its endpoints by two half-weight edges through a
/// fresh midpoint. Distances between original nodes are exactly doubled and
/// every edge of the result is a unique shortest path.
SplitGraph split_non_unique_edges(const Graph& g);

/// Comment line that marks a DIMACS file as a split graph.
std::string split_marker_comment(NodeId original_node_count);
std::optional<NodeId> parse_split_marker(const std::vector<std::string>& comments);

/// Minimal node-anchor representation of a path in a split graph: anchors
/// sit where the maximal unique segments meet. Throws IntegrityError if a
/// single edge of p is not a unique shortest path (graph not split).
ViaNodeRepr via_nodes(ShortestPathEngine& split_engine, const Path& p);
Path decompress_via_nodes(ShortestPathEngine& split_engine, const ViaNodeRepr& r);

}  // namespace routezip
