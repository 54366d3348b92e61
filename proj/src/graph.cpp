#include "routezip/graph.hpp"

#include <algorithm>

#include "routezip/error.hpp"

namespace routezip {

Cost& Cost::operator+=(Cost other) {
  if (is_infinite() || other.is_infinite()) {
    value_ = kInfinity;
    return *this;
  }
  if (other.value_ >= kInfinity - value_) {
    throw OverflowError("cost addition overflows");
  }
  value_ += other.value_;
  return *this;
}

std::string to_string(Cost c) {
  return c.is_infinite() ? std::string("inf") : std::to_string(c.value());
}

Graph Graph::from_arcs(NodeId node_count, std::span<const Arc> arcs) {
  if (node_count == kInvalidNode) {
    throw RangeError("node count too large");
  }
  std::vector<Arc> sorted;
  sorted.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.tail >= node_count || a.head >= node_count) {
      throw RangeError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") references a node outside [0," + std::to_string(node_count) + ")");
    }
    if (a.weight <= 0) {
      throw DomainError("non-positive weight " + std::to_string(a.weight));
    }
    if (a.weight > std::numeric_limits<Weight>::max()) {
      throw DomainError("weight " + std::to_string(a.weight) + " exceeds 32 bits");
    }
    if (a.tail == a.head) {
      throw DomainError("self-loop at node " + std::to_string(a.tail));
    }
    sorted.push_back(a);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Arc& x, const Arc& y) {
    if (x.tail != y.tail) return x.tail < y.tail;
    if (x.head != y.head) return x.head < y.head;
    return x.weight < y.weight;
  });

  Graph g;
  g.node_count_ = node_count;
  g.out_offsets_.assign(std::size_t{node_count} + 1, 0);
  g.in_offsets_.assign(std::size_t{node_count} + 1, 0);

  std::vector<Arc> unique;
  unique.reserve(sorted.size());
  for (const Arc& a : sorted) {
    if (!unique.empty() && unique.back().tail == a.tail && unique.back().head == a.head) {
      ++g.duplicates_removed_;  // sorted ascending: the kept arc has the minimum weight
      continue;
    }
    unique.push_back(a);
  }

  for (const Arc& a : unique) {
    ++g.out_offsets_[a.tail + 1];
    ++g.in_offsets_[a.head + 1];
  }
  for (NodeId u = 0; u < node_count; ++u) {
    g.out_offsets_[u + 1] += g.out_offsets_[u];
    g.in_offsets_[u + 1] += g.in_offsets_[u];
  }
  g.out_heads_.resize(unique.size());
  g.out_weights_.resize(unique.size());
  g.in_tails_.resize(unique.size());
  g.in_weights_.resize(unique.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const Arc& a = unique[i];
    g.out_heads_[i] = a.head;
    g.out_weights_[i] = static_cast<Weight>(a.weight);
    // arcs are visited in tail order, so each in-list ends up sorted by tail
    std::size_t slot = in_fill[a.head]++;
    g.in_tails_[slot] = a.tail;
    g.in_weights_[slot] = static_cast<Weight>(a.weight);
  }
  return g;
}

std::optional<Weight> Graph::weight(NodeId tail, NodeId head) const {
  if (tail >= node_count_ || head >= node_count_) {
    return std::nullopt;
  }
  auto heads = out_heads(tail);
  auto it = std::lower_bound(heads.begin(), heads.end(), head);
  if (it == heads.end() || *it != head) {
    return std::nullopt;
  }
  return out_weights(tail)[static_cast<std::size_t>(it - heads.begin())];
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> result;
  result.reserve(edge_count());
  for (NodeId u = 0; u < node_count_; ++u) {
    auto heads = out_heads(u);
    auto weights = out_weights(u);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      result.push_back({u, heads[i], weights[i]});
    }
  }
  return result;
}

std::uint64_t Graph::fingerprint() const {
  detail::Fnv1a h;
  h.add(node_count_);
  h.add(edge_count());
  for (const Arc& a : arcs()) {
    h.add(detail::pack(a.tail, a.head));
    h.add(static_cast<std::uint64_t>(a.weight));
  }
  return h.value();
}

bool operator==(const Graph& a, const Graph& b) {
  return a.node_count_ == b.node_count_ && a.out_offsets_ == b.out_offsets_ &&
         a.out_heads_ == b.out_heads_ && a.out_weights_ == b.out_weights_;
}

Path Path::from_nodes(std::span<const NodeId> nodes) {
  Path p;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    p.push_back({nodes[i - 1], nodes[i]});
  }
  return p;
}

std::vector<NodeId> Path::nodes() const {
  std::vector<NodeId> result;
  if (edges_.empty()) {
    return result;
  }
  result.reserve(edges_.size() + 1);
  result.push_back(edges_.front().tail);
  for (const EdgeRef& e : edges_) {
    result.push_back(e.head);
  }
  return result;
}

Path Path::slice(std::size_t first, std::size_t last) const {
  return Path(std::vector<EdgeRef>(edges_.begin() + static_cast<std::ptrdiff_t>(first),
                                   edges_.begin() + static_cast<std::ptrdiff_t>(last)));
}

std::optional<PathViolation> validate_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && p[i - 1].head != p[i].tail) {
      return PathViolation{i, PathViolation::Kind::kNotConsecutive};
    }
    if (!g.has_edge(p[i])) {
      return PathViolation{i, PathViolation::Kind::kMissingEdge};
    }
  }
  return std::nullopt;
}

Cost path_cost(const Graph& g, const Path& p) {
  Cost total;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto w = g.weight(p[i]);
    if (!w) {
      throw PathError("edge at position " + std::to_string(i) + " is not in the graph");
    }
    total += Cost(*w);
  }
  return total;
}

Path concat(const Path& p, const Path& q) {
  if (!p.empty() && !q.empty() && p.target() != q.source()) {
    throw PathError("cannot concatenate: path ends at " + std::to_string(p.target()) +
                    " but next path starts at " + std::to_string(q.source()));
  }
  Path result = p;
  result.append(q);
  return result;
}

}  // namespace routezip
