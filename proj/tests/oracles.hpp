#pragma once

// Brute-force references used by the tests. None of these go through the
// library's search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "routezip/graph.hpp"

namespace routezip::testing {

// Named nodes for the small hand-checked graphs.
inline constexpr NodeId a = 0, b = 1, c = 2, d = 3, e = 4;

// a->b->c->d->e, unit weights.
inline Graph chain_g2() {
  std::vector<Arc> arcs{{a, b, 1}, {b, c, 1}, {c, d, 1}, {d, e, 1}};
  return Graph::from_arcs(5, arcs);
}

// a->b, b->d, a->c, c->d, unit weights.
inline Graph diamond_g1() {
  std::vector<Arc> arcs{{a, b, 1}, {b, d, 1}, {a, c, 1}, {c, d, 1}};
  return Graph::from_arcs(4, arcs);
}

// diamond plus a->d of weight 2.
inline Graph diamond_g3() {
  std::vector<Arc> arcs{{a, b, 1}, {b, d, 1}, {a, c, 1}, {c, d, 1}, {a, d, 2}};
  return Graph::from_arcs(4, arcs);
}

inline constexpr std::uint64_t kNoPath = std::numeric_limits<std::uint64_t>::max();

struct Counted {
  std::uint64_t distance = kNoPath;
  std::uint64_t count = 0;  // exact number of shortest paths
};

/// Enumerates every simple s-t path. With positive weights all shortest
/// paths are simple, so the minimum and its multiplicity are exact.
inline Counted enumerate_shortest(const Graph& g, NodeId s, NodeId t) {
  Counted result;
  if (s == t) return {0, 1};
  std::vector<bool> on_path(g.node_count(), false);
  std::function<void(NodeId, std::uint64_t)> dfs = [&](NodeId u, std::uint64_t cost) {
    if (cost > result.distance) return;
    if (u == t) {
      if (cost < result.distance) {
        result = {cost, 1};
      } else {
        ++result.count;
      }
      return;
    }
    on_path[u] = true;
    auto heads = g.out_heads(u);
    auto weights = g.out_weights(u);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      if (!on_path[heads[i]]) dfs(heads[i], cost + weights[i]);
    }
    on_path[u] = false;
  };
  dfs(s, 0);
  return result;
}

inline std::vector<std::uint64_t> bellman_ford(const Graph& g, NodeId s) {
  std::vector<std::uint64_t> dist(g.node_count(), kNoPath);
  dist[s] = 0;
  auto arcs = g.arcs();
  for (NodeId round = 0; round < g.node_count(); ++round) {
    bool changed = false;
    for (const Arc& arc : arcs) {
      if (dist[arc.tail] == kNoPath) continue;
      std::uint64_t nd = dist[arc.tail] + static_cast<std::uint64_t>(arc.weight);
      if (nd < dist[arc.head]) {
        dist[arc.head] = nd;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  NodeId n = g.node_count();
  std::vector<std::vector<std::uint64_t>> dist(n, std::vector<std::uint64_t>(n, kNoPath));
  for (NodeId v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& arc : g.arcs()) {
    dist[arc.tail][arc.head] = std::min<std::uint64_t>(dist[arc.tail][arc.head], arc.weight);
  }
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      if (dist[i][k] == kNoPath) continue;
      for (NodeId j = 0; j < n; ++j) {
        if (dist[k][j] == kNoPath) continue;
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

/// Whether p (non-empty) is the unique shortest path, decided by enumeration.
inline bool brute_unique(const Graph& g, const Path& p) {
  std::uint64_t cost = 0;
  for (const EdgeRef& edge : p) cost += *g.weight(edge);
  Counted c = enumerate_shortest(g, p.source(), p.target());
  return c.count == 1 && c.distance == cost;
}

/// Smallest number of via edges over all subsequences of p whose gaps are
/// unique shortest paths (empty gaps allowed), found by trying every subset.
inline std::size_t brute_min_vias(const Graph& g, const Path& p) {
  std::size_t n = p.size();
  // unique_segment[i][j]: edges i..j-1 (0-based, half open) form a unique
  // shortest path; empty ranges count as unique.
  std::vector<std::vector<bool>> unique_segment(n + 1, std::vector<bool>(n + 1, true));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      unique_segment[i][j] = brute_unique(g, p.slice(i, j));
    }
  }
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    std::size_t gap_start = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i) & 1u) {
        ok = unique_segment[gap_start][i];
        gap_start = i + 1;
      }
    }
    if (ok && unique_segment[gap_start][n]) best = size;
  }
  return best;
}

/// All simple paths with 1..max_edges edges.
inline std::vector<Path> simple_paths(const Graph& g, std::size_t max_edges) {
  std::vector<Path> result;
  std::vector<NodeId> stack;
  std::vector<bool> on_path(g.node_count(), false);
  std::function<void(NodeId)> dfs = [&](NodeId u) {
    if (stack.size() >= 2) result.push_back(Path::from_nodes(stack));
    if (stack.size() > max_edges) return;
    for (NodeId v : g.out_heads(u)) {
      if (on_path[v]) continue;
      on_path[v] = true;
      stack.push_back(v);
      dfs(v);
      stack.pop_back();
      on_path[v] = false;
    }
  };
  for (NodeId s = 0; s < g.node_count(); ++s) {
    on_path[s] = true;
    stack = {s};
    dfs(s);
    on_path[s] = false;
  }
  return result;
}

}  // namespace routezip::testing
