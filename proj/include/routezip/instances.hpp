#pragma once

#include <random>
#include <string_view>

#include "routezip/graph.hpp"
#include "routezip/shortest_path.hpp"

namespace routezip {

/// Inclusive weight range; {1, 1} is unit weights.
struct WeightRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// Parses "unit" or "random:LO..HI". Throws DomainError otherwise.
WeightRange parse_weights(std::string_view spec);

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], computed portably from the raw engine.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Bidirected width x height lattice, node (x, y) = y * width + x.
Graph make_grid(NodeId width, NodeId height, WeightRange weights, std::uint64_t seed);
/// 0 -> 1 -> ... -> n-1.
Graph make_chain(NodeId n, WeightRange weights, std::uint64_t seed);
/// 0->1, 1->3, 0->2, 2->3, all weight 1.
Graph make_diamond();
/// Each ordered pair (u, v), u != v, becomes an edge with probability
/// `density`.
Graph make_random_graph(NodeId n, double density, WeightRange weights, Rng& rng);

/// Random walk of exactly `length` edges. Throws PathError for length 0 or
/// if no walk of that length is found.
Path random_walk(const Graph& g, std::size_t length, Rng& rng);

/// Chains shortest paths between random targets until `length` edges are
/// collected, splices `detours` short random excursions into it and keeps
/// the first `length` edges. Shorter if the walk gets stuck; throws
/// PathError if nothing could be generated.
Path perturbed_sp_path(ShortestPathEngine& engine, std::size_t length, std::size_t detours, Rng& rng);

}  // namespace routezip
