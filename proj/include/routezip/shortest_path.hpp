#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "routezip/graph.hpp"

namespace routezip {

struct SpResult {
  Cost distance = Cost::infinity();
  /// Number of distinct shortest paths, saturated at 2.
  std::uint8_t multiplicity = 0;
  /// A shortest path; present iff the target is reachable.
  std::optional<Path> witness;

  bool unique() const { return multiplicity == 1; }
};

/// One-to-one Dijkstra that counts shortest paths (saturating at 2) so that
/// uniqueness is decided exactly.
///
/// The engine keeps the search tree of its last source and resumes it when
/// the next query starts at the same node; scanning a path prefix by prefix
/// therefore costs one search per anchor rather than one per probe. Answers
/// do not depend on this. An engine is not safe for concurrent use; give each
/// thread its own.
///
/// Among equal-distance predecessors the witness follows the one settled
/// first. Equal keys settle in increasing node id order.
class ShortestPathEngine {
 public:
  explicit ShortestPathEngine(const Graph& g);

  const Graph& graph() const { return *graph_; }

  SpResult query(NodeId s, NodeId t);

  /// True iff p is the unique shortest path from its source to its target.
  /// Throws PathError for an empty path or one not in the graph.
  bool is_unique_sp(const Path& p);

  /// True iff there is exactly one shortest s-t path and it costs `cost`.
  /// Counts as one query.
  bool is_unique_between(NodeId s, NodeId t, Cost cost);

  std::size_t query_counter() const { return queries_; }
  void reset_query_counter() { queries_ = 0; }

 private:
  struct Entry {
    std::uint64_t dist;
    NodeId node;
    bool operator>(const Entry& o) const {
      return dist != o.dist ? dist > o.dist : node > o.node;
    }
  };

  void restart(NodeId s);
  void search_until_settled(NodeId t);
  bool touched(NodeId v) const { return stamp_[v] == epoch_; }
  void touch(NodeId v);

  const Graph* graph_;
  std::size_t queries_ = 0;

  NodeId source_ = kInvalidNode;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint64_t> dist_;
  std::vector<std::uint8_t> count_;
  std::vector<NodeId> parent_;
  std::vector<bool> settled_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

}  // namespace routezip
