#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace routezip {

using NodeId = std::uint32_t;
using Weight = std::uint32_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

/// Non-negative path cost. The largest representable value is reserved as
/// the "unreachable" sentinel; adding two finite costs whose sum would reach
/// it throws OverflowError.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::uint64_t value) : value_(value) {}

  static constexpr Cost infinity() { return Cost(kInfinity); }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr std::uint64_t value() const { return value_; }

  Cost& operator+=(Cost other);
  friend Cost operator+(Cost a, Cost b) { return a += b; }

  constexpr auto operator<=>(const Cost&) const = default;

 private:
  static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

std::string to_string(Cost c);

/// A directed edge identified by its endpoints. After deduplication the pair
/// is unique within a Graph.
struct EdgeRef {
  NodeId tail = 0;
  NodeId head = 0;

  constexpr auto operator<=>(const EdgeRef&) const = default;
};

/// Weighted input arc, used to build a Graph.
struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  std::int64_t weight = 0;
};

/// Immutable weighted digraph in forward and reverse CSR form. Adjacency of
/// each node is sorted by neighbour id.
class Graph {
 public:
  struct Neighbor {
    NodeId node;
    Weight weight;
  };

  Graph() = default;

  /// Validates and deduplicates the arcs. Parallel arcs keep the minimum
  /// weight. Throws RangeError for ids >= node_count, DomainError for
  /// non-positive or oversized weights and for self-loops.
  static Graph from_arcs(NodeId node_count, std::span<const Arc> arcs);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return out_heads_.size(); }
  /// Number of parallel arcs dropped while building.
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  std::span<const NodeId> out_heads(NodeId u) const {
    return {out_heads_.data() + out_offsets_[u], out_heads_.data() + out_offsets_[u + 1]};
  }
  std::span<const Weight> out_weights(NodeId u) const {
    return {out_weights_.data() + out_offsets_[u], out_weights_.data() + out_offsets_[u + 1]};
  }
  std::span<const NodeId> in_tails(NodeId v) const {
    return {in_tails_.data() + in_offsets_[v], in_tails_.data() + in_offsets_[v + 1]};
  }
  std::span<const Weight> in_weights(NodeId v) const {
    return {in_weights_.data() + in_offsets_[v], in_weights_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
  std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  std::optional<Weight> weight(NodeId tail, NodeId head) const;
  std::optional<Weight> weight(EdgeRef e) const { return weight(e.tail, e.head); }
  bool has_edge(EdgeRef e) const { return weight(e).has_value(); }

  /// All edges as arcs, ordered by (tail, head).
  std::vector<Arc> arcs() const;

  /// FNV-1a hash of the node count and the canonical edge list.
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  NodeId node_count_ = 0;
  std::size_t duplicates_removed_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_heads_;
  std::vector<Weight> out_weights_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_tails_;
  std::vector<Weight> in_weights_;
};

/// Sequence of consecutive directed edges. An empty path is a path at a
/// single node and has no source or target.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<EdgeRef> edges) : edges_(std::move(edges)) {}

  /// Path visiting the given nodes in order; fewer than two nodes yield an
  /// empty path.
  static Path from_nodes(std::span<const NodeId> nodes);

  const std::vector<EdgeRef>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const EdgeRef& operator[](std::size_t i) const { return edges_[i]; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  NodeId source() const { return edges_.front().tail; }
  NodeId target() const { return edges_.back().head; }

  /// u_1 ... u_{n+1}; empty for the empty path.
  std::vector<NodeId> nodes() const;

  void push_back(EdgeRef e) { edges_.push_back(e); }
  /// Appends without checking that the endpoints meet.
  void append(const Path& other) { edges_.insert(edges_.end(), other.begin(), other.end()); }

  /// Edges [first, last) as a new path (0-based, half open).
  Path slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<EdgeRef> edges_;
};

struct PathViolation {
  enum class Kind { kNotConsecutive, kMissingEdge };
  std::size_t position = 0;
  Kind kind = Kind::kMissingEdge;

  friend bool operator==(const PathViolation&, const PathViolation&) = default;
};

/// Returns the first offending position, or nullopt if p is a path in g.
std::optional<PathViolation> validate_path(const Graph& g, const Path& p);

/// Sum of edge weights. Throws PathError if an edge is missing from g and
/// OverflowError if the sum is not representable.
Cost path_cost(const Graph& g, const Path& p);

/// p followed by q. Throws PathError if both are non-empty and the last head
/// of p differs from the first tail of q.
Path concat(const Path& p, const Path& q);

namespace detail {

class Fnv1a {
 public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (v >> (8 * i)) & 0xffu;
      hash_ *= 0x100000001b3ull;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::uint64_t pack(NodeId tail, NodeId head) {
  return (static_cast<std::uint64_t>(tail) << 32) | head;
}

}  // namespace detail

}  // namespace routezip
