#include "routezip/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "routezip/error.hpp"
#include "routezip/via.hpp"

namespace routezip {

namespace {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

// Remaining-graph adjacency during contraction. `edge` indexes the edge
// list; one entry per ordered pair holding the cheapest edge.
struct Adj {
  NodeId node;
  std::uint64_t weight;
  std::uint32_t edge;
};

class Contractor {
 public:
  Contractor(const Graph& g, const BuildParams& params)
      : params_(params),
        out_(g.node_count()),
        in_(g.node_count()),
        contracted_(g.node_count(), false),
        contracted_neighbors_(g.node_count(), 0),
        wstamp_(g.node_count(), 0),
        wdist_(g.node_count(), kUnreached),
        whops_(g.node_count(), 0) {
    for (const Arc& a : g.arcs()) {
      auto idx = static_cast<std::uint32_t>(edges_.size());
      edges_.push_back({a.tail, a.head, static_cast<std::uint64_t>(a.weight), false, kInvalidNode,
                        false, false});
      out_[a.tail].push_back({a.head, static_cast<std::uint64_t>(a.weight), idx});
      in_[a.head].push_back({a.tail, static_cast<std::uint64_t>(a.weight), idx});
    }
    dead_.assign(edges_.size(), false);
  }

  std::vector<NodeId> run() {
    NodeId n = static_cast<NodeId>(out_.size());
    std::vector<NodeId> order;
    order.reserve(n);
    if (!params_.order.empty()) {
      std::vector<bool> seen(n, false);
      if (params_.order.size() != n) throw DomainError("forced order is not a permutation");
      for (NodeId u : params_.order) {
        if (u >= n || seen[u]) throw DomainError("forced order is not a permutation");
        seen[u] = true;
      }
      for (NodeId u : params_.order) {
        contract(u);
        order.push_back(u);
      }
      return order;
    }

    using Key = std::pair<long long, NodeId>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    for (NodeId u = 0; u < n; ++u) {
      queue.push({priority(u), u});
    }
    while (!queue.empty()) {
      auto [stale, u] = queue.top();
      queue.pop();
      Key fresh{priority(u), u};
      if (!queue.empty() && queue.top() < fresh) {
        queue.push(fresh);
        continue;
      }
      contract(u);
      order.push_back(u);
    }
    return order;
  }

  std::vector<ChEdge> take_edges() {
    std::vector<ChEdge> result;
    result.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!dead_[i]) result.push_back(edges_[i]);
    }
    return result;
  }

 private:
  long long priority(NodeId u) {
    long long shortcuts = process<false>(u);
    long long removed = 0;
    for (const Adj& a : in_[u]) removed += !contracted_[a.node];
    for (const Adj& a : out_[u]) removed += !contracted_[a.node];
    return shortcuts - removed + contracted_neighbors_[u];
  }

  void contract(NodeId u) {
    process<true>(u);
    contracted_[u] = true;
    for (const Adj& a : in_[u]) ++contracted_neighbors_[a.node];
    for (const Adj& a : out_[u]) ++contracted_neighbors_[a.node];
  }

  // Number of shortcuts contracting u needs; adds them when kApply.
  template <bool kApply>
  int process(NodeId u) {
    std::vector<Adj> ins;
    std::vector<Adj> outs;
    for (const Adj& a : in_[u]) {
      if (!contracted_[a.node]) ins.push_back(a);
    }
    std::uint64_t max_out = 0;
    for (const Adj& a : out_[u]) {
      if (!contracted_[a.node]) {
        outs.push_back(a);
        max_out = std::max(max_out, a.weight);
      }
    }
    int count = 0;
    if (outs.empty()) return 0;
    for (const Adj& in : ins) {
      witness_search(in.node, u, in.weight + max_out);
      for (const Adj& out : outs) {
        if (out.node == in.node) continue;
        std::uint64_t via = in.weight + out.weight;
        if (witness_dist(out.node) <= via) continue;
        ++count;
        if constexpr (kApply) add_shortcut(in.node, out.node, via, u, in.edge, out.edge);
      }
    }
    return count;
  }

  std::uint64_t witness_dist(NodeId v) const {
    return wstamp_[v] == wepoch_ ? wdist_[v] : kUnreached;
  }

  void witness_search(NodeId source, NodeId avoid, std::uint64_t limit) {
    ++wepoch_;
    using Entry = std::pair<std::uint64_t, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto reach = [&](NodeId v, std::uint64_t d, std::uint32_t hops) {
      if (wstamp_[v] != wepoch_ || d < wdist_[v]) {
        wstamp_[v] = wepoch_;
        wdist_[v] = d;
        whops_[v] = hops;
        heap.push({d, v});
      }
    };
    reach(source, 0, 0);
    std::size_t settled = 0;
    while (!heap.empty() && settled < params_.settle_limit) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != wdist_[x]) continue;
      if (d > limit) break;
      ++settled;
      if (whops_[x] >= params_.hop_limit) continue;
      for (const Adj& a : out_[x]) {
        if (a.node == avoid || contracted_[a.node]) continue;
        reach(a.node, d + a.weight, whops_[x] + 1);
      }
    }
  }

  Adj* find_adj(std::vector<Adj>& list, NodeId node) {
    for (Adj& a : list) {
      if (a.node == node) return &a;
    }
    return nullptr;
  }

  void add_shortcut(NodeId v, NodeId w, std::uint64_t weight, NodeId middle, std::uint32_t first,
                    std::uint32_t second) {
    Adj* existing = find_adj(out_[v], w);
    if (existing && existing->weight <= weight) return;
    auto idx = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back({v, w, weight, true, middle, edges_[first].shortcut, edges_[second].shortcut});
    dead_.push_back(false);
    if (existing) {
      // The replaced edge joins two remaining nodes, so no shortcut uses it
      // as a constituent yet. Original edges stay in the search graph.
      if (edges_[existing->edge].shortcut) dead_[existing->edge] = true;
      existing->weight = weight;
      existing->edge = idx;
      Adj* back = find_adj(in_[w], v);
      back->weight = weight;
      back->edge = idx;
    } else {
      out_[v].push_back({w, weight, idx});
      in_[w].push_back({v, weight, idx});
    }
  }

  const BuildParams& params_;
  std::vector<ChEdge> edges_;
  std::vector<bool> dead_;
  std::vector<std::vector<Adj>> out_;
  std::vector<std::vector<Adj>> in_;
  std::vector<bool> contracted_;
  std::vector<int> contracted_neighbors_;
  std::uint32_t wepoch_ = 0;
  std::vector<std::uint32_t> wstamp_;
  std::vector<std::uint64_t> wdist_;
  std::vector<std::uint32_t> whops_;
};

}  // namespace

Hierarchy::Hierarchy(NodeId node_count, std::vector<NodeId> order, std::vector<ChEdge> edges)
    : node_count_(node_count), order_(std::move(order)), edges_(std::move(edges)) {
  if (order_.size() != node_count_) throw FormatError("order does not cover all nodes");
  level_.assign(node_count_, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    NodeId v = order_[i];
    if (v >= node_count_ || level_[v] != std::numeric_limits<std::uint32_t>::max()) {
      throw FormatError("order is not a permutation");
    }
    level_[v] = static_cast<std::uint32_t>(i);
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ChEdge& e = edges_[i];
    if (e.tail >= node_count_ || e.head >= node_count_ || e.tail == e.head || e.weight == 0) {
      throw FormatError("edge " + std::to_string(i) + " has invalid endpoints or weight");
    }
    auto& index = e.shortcut ? shortcut_index_ : original_index_;
    if (!index.emplace(detail::pack(e.tail, e.head), static_cast<std::uint32_t>(i)).second) {
      throw FormatError("duplicate edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
    }
    if (!e.shortcut && e.weight > std::numeric_limits<Weight>::max()) {
      throw FormatError("original edge weight exceeds 32 bits");
    }
    shortcut_count_ += e.shortcut;
  }
  for (const ChEdge& e : edges_) {
    if (!e.shortcut) continue;
    if (e.middle >= node_count_ || level_[e.middle] >= level_[e.tail] ||
        level_[e.middle] >= level_[e.head]) {
      throw FormatError("shortcut middle node must lie strictly below both endpoints");
    }
    const ChEdge* first = find(e.tail, e.middle, e.first_shortcut);
    const ChEdge* second = find(e.middle, e.head, e.second_shortcut);
    if (!first || !second) throw FormatError("shortcut constituent missing");
    if (first->weight > e.weight || second->weight != e.weight - first->weight) {
      throw FormatError("shortcut weight differs from its constituents");
    }
  }

  std::vector<std::size_t> out_degree(node_count_, 0);
  std::vector<std::size_t> in_degree(node_count_, 0);
  up_offsets_.assign(std::size_t{node_count_} + 1, 0);
  down_offsets_.assign(std::size_t{node_count_} + 1, 0);
  for (const ChEdge& e : edges_) {
    ++out_degree[e.tail];
    ++in_degree[e.head];
    if (level_[e.head] > level_[e.tail]) {
      ++up_offsets_[e.tail + 1];
    } else {
      ++down_offsets_[e.head + 1];
    }
  }
  for (NodeId v = 0; v < node_count_; ++v) {
    max_degree_ = std::max({max_degree_, out_degree[v], in_degree[v]});
    up_offsets_[v + 1] += up_offsets_[v];
    down_offsets_[v + 1] += down_offsets_[v];
  }
  up_edges_.resize(up_offsets_.back());
  down_edges_.resize(down_offsets_.back());
  std::vector<std::size_t> up_fill(up_offsets_.begin(), up_offsets_.end() - 1);
  std::vector<std::size_t> down_fill(down_offsets_.begin(), down_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ChEdge& e = edges_[i];
    if (level_[e.head] > level_[e.tail]) {
      up_edges_[up_fill[e.tail]++] = static_cast<std::uint32_t>(i);
    } else {
      down_edges_[down_fill[e.head]++] = static_cast<std::uint32_t>(i);
    }
  }
}

const ChEdge* Hierarchy::find(NodeId tail, NodeId head, bool shortcut) const {
  const auto& index = shortcut ? shortcut_index_ : original_index_;
  auto it = index.find(detail::pack(tail, head));
  return it == index.end() ? nullptr : &edges_[it->second];
}

std::uint64_t Hierarchy::fingerprint() const {
  detail::Fnv1a h;
  h.add(node_count_);
  for (NodeId v : order_) h.add(v);
  h.add(edges_.size());
  for (const ChEdge& e : edges_) {
    h.add(detail::pack(e.tail, e.head));
    h.add(e.weight);
    h.add(e.shortcut ? detail::pack(e.middle, (e.first_shortcut ? 2u : 0u) | (e.second_shortcut ? 1u : 0u))
                     : 0xffffffffffffffffull);
  }
  return h.value();
}

Hierarchy build_hierarchy(const Graph& g, const BuildParams& params) {
  Contractor contractor(g, params);
  std::vector<NodeId> order = contractor.run();
  return Hierarchy(g.node_count(), std::move(order), contractor.take_edges());
}

ChQueryResult ch_query(const Hierarchy& h, NodeId s, NodeId t) {
  NodeId n = h.node_count();
  if (s >= n || t >= n) throw RangeError("query endpoint outside the hierarchy");
  ChQueryResult result;
  if (s == t) {
    result.distance = Cost(0);
    return result;
  }

  struct Side {
    std::vector<std::uint64_t> dist;
    std::vector<std::uint32_t> parent;
    std::vector<bool> settled;
    std::priority_queue<std::pair<std::uint64_t, NodeId>, std::vector<std::pair<std::uint64_t, NodeId>>,
                        std::greater<>>
        heap;
  };
  auto make_side = [n](NodeId start) {
    Side side{std::vector<std::uint64_t>(n, kUnreached), std::vector<std::uint32_t>(n, 0),
              std::vector<bool>(n, false), {}};
    side.dist[start] = 0;
    side.heap.push({0, start});
    return side;
  };
  Side fwd = make_side(s);
  Side bwd = make_side(t);
  std::uint64_t best = kUnreached;
  NodeId meet = kInvalidNode;
  auto edges = h.edges();

  auto step = [&](Side& self, const Side& other, bool forward) {
    auto [d, u] = self.heap.top();
    self.heap.pop();
    if (self.settled[u] || d != self.dist[u]) return;
    self.settled[u] = true;
    if (other.dist[u] != kUnreached) {
      std::uint64_t cand = d + other.dist[u];
      if (cand < best || (cand == best && u < meet)) {
        best = cand;
        meet = u;
      }
    }
    auto adjacent = forward ? h.upward(u) : h.downward_into(u);
    for (std::uint32_t idx : adjacent) {
      const ChEdge& e = edges[idx];
      NodeId v = forward ? e.head : e.tail;
      std::uint64_t nd = d + e.weight;
      if (nd < self.dist[v]) {
        self.dist[v] = nd;
        self.parent[v] = idx;
        self.heap.push({nd, v});
      }
    }
  };

  while (true) {
    bool fwd_live = !fwd.heap.empty() && fwd.heap.top().first < best;
    bool bwd_live = !bwd.heap.empty() && bwd.heap.top().first < best;
    if (!fwd_live && !bwd_live) break;
    if (fwd_live && (!bwd_live || fwd.heap.top().first <= bwd.heap.top().first)) {
      step(fwd, bwd, true);
    } else {
      step(bwd, fwd, false);
    }
  }
  if (meet == kInvalidNode) return result;

  result.distance = Cost(fwd.dist[meet] + bwd.dist[meet]);
  for (NodeId v = meet; v != s;) {
    const ChEdge& e = edges[fwd.parent[v]];
    result.path.push_back({e.tail, e.head, e.shortcut});
    v = e.tail;
  }
  std::reverse(result.path.begin(), result.path.end());
  for (NodeId v = meet; v != t;) {
    const ChEdge& e = edges[bwd.parent[v]];
    result.path.push_back({e.tail, e.head, e.shortcut});
    v = e.head;
  }
  return result;
}

ChPath to_ch_path(const Path& p) {
  ChPath out;
  out.reserve(p.size());
  for (const EdgeRef& e : p) out.push_back({e.tail, e.head, false});
  return out;
}

ChPath compress_with_ch(const Hierarchy& h, const Path& p, CompressStats* stats) {
  return compress_with_ch(h, to_ch_path(p), stats);
}

ChPath compress_with_ch(const Hierarchy& h, const ChPath& p, CompressStats* stats) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!h.find(p[i])) {
      throw PathError("arc at position " + std::to_string(i) + " is not in the hierarchy");
    }
    if (i > 0 && p[i - 1].head != p[i].tail) {
      throw PathError("arcs at position " + std::to_string(i) + " are not consecutive");
    }
  }
  if (p.size() < 2) return p;

  // Slot i holds the current arc that started as p[i]; the junction in
  // front of slot i (i >= 1) is node p[i].tail and stays in place until it
  // is processed, because a merge always removes the slot right of it.
  std::vector<ChArc> slot(p.begin(), p.end());
  std::vector<std::size_t> prev(p.size());
  std::vector<std::size_t> next(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    prev[i] = i == 0 ? p.size() : i - 1;
    next[i] = i + 1;
  }

  std::vector<std::size_t> junctions(p.size() - 1);
  std::iota(junctions.begin(), junctions.end(), std::size_t{1});
  std::sort(junctions.begin(), junctions.end(), [&](std::size_t a, std::size_t b) {
    std::uint32_t la = h.level(p[a].tail);
    std::uint32_t lb = h.level(p[b].tail);
    return la != lb ? la < lb : a < b;
  });

  for (std::size_t j : junctions) {
    std::size_t left = prev[j];
    const ChArc& in = slot[left];
    const ChArc& out = slot[j];
    if (stats) ++stats->shortcut_lookups;
    const ChEdge* sc = h.find(in.tail, out.head, true);
    if (!sc || sc->middle != out.tail || sc->first_shortcut != in.shortcut ||
        sc->second_shortcut != out.shortcut) {
      continue;
    }
    if (stats) ++stats->replacements;
    slot[left] = {in.tail, out.head, true};
    next[left] = next[j];
    if (next[j] < p.size()) prev[next[j]] = left;
  }

  ChPath result;
  for (std::size_t i = 0; i < p.size(); i = next[i]) {
    result.push_back(slot[i]);
  }
  return result;
}

Path unpack(const Hierarchy& h, const ChPath& p) {
  Path out;
  std::vector<const ChEdge*> stack;
  for (const ChArc& arc : p) {
    const ChEdge* e = h.find(arc);
    if (!e) {
      throw IntegrityError("arc (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                           ") is not in the hierarchy");
    }
    stack.push_back(e);
    while (!stack.empty()) {
      const ChEdge* top = stack.back();
      stack.pop_back();
      if (!top->shortcut) {
        out.push_back({top->tail, top->head});
        continue;
      }
      // constructor guarantees both constituents exist
      stack.push_back(h.find(top->middle, top->head, top->second_shortcut));
      stack.push_back(h.find(top->tail, top->middle, top->first_shortcut));
    }
  }
  return out;
}

Cost ch_path_cost(const Hierarchy& h, const ChPath& p) {
  Cost total;
  for (const ChArc& arc : p) {
    const ChEdge* e = h.find(arc);
    if (!e) throw PathError("arc is not in the hierarchy");
    total += Cost(e->weight);
  }
  return total;
}

CombinedRepr compress_combined(const Hierarchy& h, ShortestPathEngine& engine, const Path& p,
                               PrefixSearch search) {
  if (p.empty()) throw PathError("cannot compress an empty path");
  if (auto v = validate_path(engine.graph(), p)) {
    throw PathError("invalid path at position " + std::to_string(v->position));
  }
  ChPath contracted = compress_with_ch(h, p);
  std::vector<NodeId> nodes{contracted.front().tail};
  std::vector<std::uint64_t> prefix{0};
  for (const ChArc& arc : contracted) {
    nodes.push_back(arc.head);
    prefix.push_back(prefix.back() + h.find(arc)->weight);
  }
  auto unique = [&](std::size_t first, std::size_t last) {
    return engine.is_unique_between(nodes[first - 1], nodes[last],
                                    Cost(prefix[last] - prefix[first - 1]));
  };
  CombinedRepr r{p.source(), p.target(), {}};
  for (std::size_t pos : via_positions(unique, contracted.size(), search)) {
    r.vias.push_back(contracted[pos - 1]);
  }
  return r;
}

Path decompress_combined(const Hierarchy& h, ShortestPathEngine& engine, const CombinedRepr& r) {
  if (r.source >= engine.graph().node_count() || r.target >= engine.graph().node_count()) {
    throw IntegrityError("route endpoints outside the graph");
  }
  Path out;
  NodeId anchor = r.source;
  for (const ChArc& via : r.vias) {
    out.append(unique_gap(engine, anchor, via.tail));
    out.append(unpack(h, {via}));
    anchor = via.head;
  }
  out.append(unique_gap(engine, anchor, r.target));
  return out;
}

}  // namespace routezip
