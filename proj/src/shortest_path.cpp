#include "routezip/shortest_path.hpp"

#include <algorithm>

#include "routezip/error.hpp"

namespace routezip {

namespace {
constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();
}

ShortestPathEngine::ShortestPathEngine(const Graph& g)
    : graph_(&g),
      stamp_(g.node_count(), 0),
      dist_(g.node_count(), kUnreached),
      count_(g.node_count(), 0),
      parent_(g.node_count(), kInvalidNode),
      settled_(g.node_count(), false) {}

void ShortestPathEngine::touch(NodeId v) {
  if (stamp_[v] != epoch_) {
    stamp_[v] = epoch_;
    dist_[v] = kUnreached;
    count_[v] = 0;
    parent_[v] = kInvalidNode;
    settled_[v] = false;
  }
}

void ShortestPathEngine::restart(NodeId s) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  heap_ = {};
  source_ = s;
  touch(s);
  dist_[s] = 0;
  count_[s] = 1;
  heap_.push({0, s});
}

void ShortestPathEngine::search_until_settled(NodeId t) {
  const Graph& g = *graph_;
  while (!heap_.empty()) {
    if (touched(t) && settled_[t]) return;
    Entry top = heap_.top();
    heap_.pop();
    NodeId u = top.node;
    if (settled_[u] || top.dist != dist_[u]) continue;
    // Positive weights: every shortest-path predecessor of u is strictly
    // closer, so its count is final here.
    settled_[u] = true;
    auto heads = g.out_heads(u);
    auto weights = g.out_weights(u);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      NodeId v = heads[i];
      touch(v);
      if (settled_[v]) continue;
      std::uint64_t nd = top.dist + weights[i];
      if (nd < dist_[v]) {
        dist_[v] = nd;
        count_[v] = count_[u];
        parent_[v] = u;
        heap_.push({nd, v});
      } else if (nd == dist_[v]) {
        count_[v] = static_cast<std::uint8_t>(std::min(2, count_[v] + count_[u]));
      }
    }
  }
}

SpResult ShortestPathEngine::query(NodeId s, NodeId t) {
  ++queries_;
  if (s >= graph_->node_count() || t >= graph_->node_count()) {
    throw RangeError("query endpoint outside the graph");
  }
  if (s != source_) {
    restart(s);
  }
  search_until_settled(t);

  SpResult result;
  if (!touched(t) || !settled_[t]) {
    return result;
  }
  result.distance = Cost(dist_[t]);
  result.multiplicity = count_[t];
  std::vector<EdgeRef> edges;
  for (NodeId v = t; v != s; v = parent_[v]) {
    edges.push_back({parent_[v], v});
  }
  std::reverse(edges.begin(), edges.end());
  result.witness = Path(std::move(edges));
  return result;
}

bool ShortestPathEngine::is_unique_between(NodeId s, NodeId t, Cost cost) {
  ++queries_;
  if (s >= graph_->node_count() || t >= graph_->node_count()) {
    throw RangeError("query endpoint outside the graph");
  }
  if (s != source_) {
    restart(s);
  }
  search_until_settled(t);
  return touched(t) && settled_[t] && count_[t] == 1 && Cost(dist_[t]) == cost;
}

bool ShortestPathEngine::is_unique_sp(const Path& p) {
  if (p.empty()) {
    throw PathError("uniqueness of an empty path is undefined");
  }
  if (validate_path(*graph_, p)) {
    throw PathError("not a path in the graph");
  }
  return is_unique_between(p.source(), p.target(), path_cost(*graph_, p));
}

}  // namespace routezip
