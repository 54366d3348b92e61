#include "routezip/instances.hpp"

#include <charconv>

#include "routezip/error.hpp"

namespace routezip {

WeightRange parse_weights(std::string_view spec) {
  if (spec == "unit") return {1, 1};
  constexpr std::string_view kPrefix = "random:";
  auto dots = spec.find("..");
  if (spec.substr(0, kPrefix.size()) != kPrefix || dots == std::string_view::npos) {
    throw DomainError("weights must be 'unit' or 'random:LO..HI'");
  }
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("bad weight bound '" + std::string(s) + "'");
    }
    return v;
  };
  WeightRange r{number(spec.substr(kPrefix.size(), dots - kPrefix.size())), number(spec.substr(dots + 2))};
  if (r.lo <= 0 || r.hi < r.lo || r.hi > std::numeric_limits<Weight>::max()) {
    throw DomainError("weight range must satisfy 0 < LO <= HI < 2^32");
  }
  return r;
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Graph make_grid(NodeId width, NodeId height, WeightRange weights, std::uint64_t seed) {
  if (width == 0 || height == 0) throw DomainError("grid dimensions must be positive");
  if (static_cast<std::uint64_t>(width) * height >= kInvalidNode) throw RangeError("grid too large");
  Rng rng(seed);
  std::vector<Arc> arcs;
  auto link = [&](NodeId a, NodeId b) {
    arcs.push_back({a, b, uniform(rng, weights.lo, weights.hi)});
    arcs.push_back({b, a, uniform(rng, weights.lo, weights.hi)});
  };
  for (NodeId y = 0; y < height; ++y) {
    for (NodeId x = 0; x < width; ++x) {
      NodeId u = y * width + x;
      if (x + 1 < width) link(u, u + 1);
      if (y + 1 < height) link(u, u + width);
    }
  }
  return Graph::from_arcs(width * height, arcs);
}

Graph make_chain(NodeId n, WeightRange weights, std::uint64_t seed) {
  if (n == 0) throw DomainError("chain needs at least one node");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u + 1 < n; ++u) {
    arcs.push_back({u, u + 1, uniform(rng, weights.lo, weights.hi)});
  }
  return Graph::from_arcs(n, arcs);
}

Graph make_diamond() {
  std::vector<Arc> arcs{{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}};
  return Graph::from_arcs(4, arcs);
}

Graph make_random_graph(NodeId n, double density, WeightRange weights, Rng& rng) {
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < density) arcs.push_back({u, v, uniform(rng, weights.lo, weights.hi)});
    }
  }
  return Graph::from_arcs(n, arcs);
}

Path random_walk(const Graph& g, std::size_t length, Rng& rng) {
  if (length == 0) throw PathError("a walk needs at least one edge");
  if (g.node_count() == 0) throw PathError("empty graph");
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto node = static_cast<NodeId>(uniform(rng, 0, g.node_count() - 1));
    Path p;
    while (p.size() < length) {
      auto heads = g.out_heads(node);
      if (heads.empty()) break;
      NodeId next = heads[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(heads.size()) - 1))];
      p.push_back({node, next});
      node = next;
    }
    if (p.size() == length) return p;
  }
  throw PathError("no walk of length " + std::to_string(length) + " found");
}

Path perturbed_sp_path(ShortestPathEngine& engine, std::size_t length, std::size_t detours, Rng& rng) {
  const Graph& g = engine.graph();
  if (length == 0) throw PathError("a path needs at least one edge");
  if (g.node_count() < 2) throw PathError("graph too small");
  auto random_node = [&] { return static_cast<NodeId>(uniform(rng, 0, g.node_count() - 1)); };

  Path path;
  NodeId cur = random_node();
  // Appends shortest paths to random targets until `length` edges exist.
  auto extend = [&] {
    while (path.size() < length) {
      bool extended = false;
      for (int attempt = 0; attempt < 32 && !extended; ++attempt) {
        NodeId t = random_node();
        if (t == cur) continue;
        SpResult r = engine.query(cur, t);
        if (!r.witness) continue;
        path.append(*r.witness);
        cur = t;
        extended = true;
      }
      if (!extended) return;
    }
  };
  extend();

  // A detour leaves the route at u_i, wanders 1-3 random edges and rejoins
  // at u_j by a shortest path, j at most 16 edges further on.
  for (std::size_t d = 0; d < detours && !path.empty(); ++d) {
    auto nodes = path.nodes();
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(path.size()) - 1));
    auto j = std::min(path.size(), i + static_cast<std::size_t>(uniform(rng, 1, 16)));
    Path detour;
    NodeId y = nodes[i];
    for (std::int64_t k = uniform(rng, 1, 3); k > 0; --k) {
      auto heads = g.out_heads(y);
      if (heads.empty()) break;
      NodeId next = heads[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(heads.size()) - 1))];
      detour.push_back({y, next});
      y = next;
    }
    SpResult back = engine.query(y, nodes[j]);
    if (!back.witness) continue;
    detour.append(*back.witness);
    Path spliced = path.slice(0, i);
    spliced.append(detour);
    spliced.append(path.slice(j, path.size()));
    path = std::move(spliced);
    if (!path.empty()) cur = path.target();
  }
  extend();

  if (path.size() > length) path = path.slice(0, length);
  if (path.empty()) throw PathError("could not generate a path");
  return path;
}

}  // namespace routezip
