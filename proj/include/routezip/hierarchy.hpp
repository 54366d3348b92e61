#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "routezip/graph.hpp"
#include "routezip/prefix_search.hpp"
#include "routezip/shortest_path.hpp"

namespace routezip {

/// Edge of a contracted path. An original edge and a shortcut may connect
/// the same pair of nodes; the flag tells them apart.
struct ChArc {
  NodeId tail = 0;
  NodeId head = 0;
  bool shortcut = false;

  constexpr auto operator<=>(const ChArc&) const = default;
};

using ChPath = std::vector<ChArc>;

/// Edge of the search graph. A shortcut (tail, head) stands for
/// (tail, middle) followed by (middle, head), whose kinds are recorded so
/// the expansion is exact.
struct ChEdge {
  NodeId tail = 0;
  NodeId head = 0;
  std::uint64_t weight = 0;
  bool shortcut = false;
  NodeId middle = kInvalidNode;
  bool first_shortcut = false;
  bool second_shortcut = false;

  friend bool operator==(const ChEdge&, const ChEdge&) = default;
};

struct BuildParams {
  /// Witness searches relax at most this many edges away from the source.
  std::size_t hop_limit = 16;
  /// Witness searches settle at most this many nodes.
  std::size_t settle_limit = 256;
  /// Contraction order to use instead of the priority queue; must be a
  /// permutation of all nodes when non-empty.
  std::vector<NodeId> order;
};

/// Contraction hierarchy: node levels plus the search graph of all original
/// edges and the surviving shortcuts. At most one original edge and one
/// shortcut per ordered pair.
class Hierarchy {
 public:
  Hierarchy() = default;

  /// `order[i]` is contracted i-th and gets level i. Throws FormatError
  /// unless order is a permutation and every shortcut has a strictly lower
  /// middle node, existing constituents, and weight equal to their sum.
  Hierarchy(NodeId node_count, std::vector<NodeId> order, std::vector<ChEdge> edges);

  NodeId node_count() const { return node_count_; }
  std::span<const NodeId> order() const { return order_; }
  std::uint32_t level(NodeId v) const { return level_[v]; }
  std::span<const ChEdge> edges() const { return edges_; }

  const ChEdge* find(NodeId tail, NodeId head, bool shortcut) const;
  const ChEdge* find(const ChArc& a) const { return find(a.tail, a.head, a.shortcut); }

  /// Edge indices leaving u towards higher levels.
  std::span<const std::uint32_t> upward(NodeId u) const {
    return {up_edges_.data() + up_offsets_[u], up_edges_.data() + up_offsets_[u + 1]};
  }
  /// Edge indices entering v from higher levels.
  std::span<const std::uint32_t> downward_into(NodeId v) const {
    return {down_edges_.data() + down_offsets_[v], down_edges_.data() + down_offsets_[v + 1]};
  }

  std::size_t shortcut_count() const { return shortcut_count_; }
  /// Maximum number of incoming or outgoing search-graph edges of a node.
  std::size_t max_degree() const { return max_degree_; }
  std::uint64_t fingerprint() const;

  friend bool operator==(const Hierarchy& a, const Hierarchy& b) {
    return a.node_count_ == b.node_count_ && a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  NodeId node_count_ = 0;
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> level_;
  std::vector<ChEdge> edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> original_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> shortcut_index_;
  std::vector<std::size_t> up_offsets_{0};
  std::vector<std::uint32_t> up_edges_;
  std::vector<std::size_t> down_offsets_{0};
  std::vector<std::uint32_t> down_edges_;
  std::size_t shortcut_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// Contracts nodes bottom-up. For each contracted u and remaining in/out
/// neighbours v != w, adds shortcut (v, w) unless a witness path avoiding u
/// of cost <= w(v,u) + w(u,w) is found by the bounded witness search.
/// Order: lazy priority queue on edge difference plus contracted
/// neighbours, ties by node id.
Hierarchy build_hierarchy(const Graph& g, const BuildParams& params = {});

struct ChQueryResult {
  Cost distance = Cost::infinity();
  /// Up-then-down path attaining the distance; empty when s == t or
  /// unreachable.
  ChPath path;
};

/// Bidirectional upward search.
ChQueryResult ch_query(const Hierarchy& h, NodeId s, NodeId t);

struct CompressStats {
  std::size_t shortcut_lookups = 0;
  std::size_t replacements = 0;
};

/// Contracts a path as far as the hierarchy allows: interior nodes are
/// visited by increasing level and a pair (v,u),(u,w) is merged when the
/// shortcut (v,w) has middle u and exactly these constituents. Throws
/// PathError if p is not a path of the hierarchy.
ChPath compress_with_ch(const Hierarchy& h, const ChPath& p, CompressStats* stats = nullptr);
ChPath compress_with_ch(const Hierarchy& h, const Path& p, CompressStats* stats = nullptr);

ChPath to_ch_path(const Path& p);

/// Recursively expands all shortcuts. Throws IntegrityError for arcs that
/// are not in the hierarchy.
Path unpack(const Hierarchy& h, const ChPath& p);

Cost ch_path_cost(const Hierarchy& h, const ChPath& p);

/// Via-edge representation of a contracted path. Vias may be shortcuts.
struct CombinedRepr {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<ChArc> vias;

  friend bool operator==(const CombinedRepr&, const CombinedRepr&) = default;
};

/// Contracts p, then keeps the minimal set of contracted arcs such that each
/// gap, unpacked, is the unique shortest path in the original graph
/// (`engine` must run on the graph the hierarchy was built from).
CombinedRepr compress_combined(const Hierarchy& h, ShortestPathEngine& engine, const Path& p,
                               PrefixSearch search = PrefixSearch::kGallop);

/// Unique shortest gaps in the original graph, unpacked vias in between.
Path decompress_combined(const Hierarchy& h, ShortestPathEngine& engine, const CombinedRepr& r);

/// Binary "CHR1" format, little-endian fixed width.
void save_hierarchy(std::ostream& out, const Hierarchy& h);
/// Throws LengthError on truncation, FormatError on any invariant violation.
Hierarchy load_hierarchy(std::istream& in);

}  // namespace routezip
