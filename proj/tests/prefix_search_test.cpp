#include <gtest/gtest.h>

#include "oracles.hpp"
#include "routezip/error.hpp"
#include "routezip/instances.hpp"
#include "routezip/prefix_search.hpp"
#include "routezip/shortest_path.hpp"
#include "routezip/via.hpp"

namespace routezip {
namespace {

using namespace routezip::testing;

const Path kChain({{a, b}, {b, c}, {c, d}, {d, e}});

TEST(PrefixSearchTest, WholeChainIsUnique) {
  Graph g2 = chain_g2();
  ShortestPathEngine engine(g2);
  EXPECT_EQ(max_prefix_sp_binary(engine, kChain, 1, 4), 4u);
  EXPECT_EQ(max_prefix_sp_gallop(engine, kChain, 1, 4), 4u);
  EXPECT_EQ(max_prefix_sp_gallop(engine, kChain, 1, 1), 1u);
  EXPECT_EQ(max_prefix_sp_binary(engine, kChain, 3, 4), 4u);
}

TEST(PrefixSearchTest, DiamondStopsAfterFirstEdge) {
  Graph g1 = diamond_g1();
  ShortestPathEngine engine(g1);
  Path p({{a, b}, {b, d}});
  EXPECT_EQ(max_prefix_sp_binary(engine, p, 1, 2), 1u);
  EXPECT_EQ(max_prefix_sp_gallop(engine, p, 1, 2), 1u);
}

TEST(PrefixSearchTest, NonUniqueFirstEdgeGivesEmptyPrefix) {
  Graph g3 = diamond_g3();
  ShortestPathEngine engine(g3);
  Path p({{a, d}});
  EXPECT_EQ(max_prefix_sp_binary(engine, p, 1, 1), 0u);
  EXPECT_EQ(max_prefix_sp_gallop(engine, p, 1, 1), 0u);
}

TEST(PrefixSearchTest, BadBracketIsAnError) {
  Graph g2 = chain_g2();
  ShortestPathEngine engine(g2);
  EXPECT_THROW(max_prefix_sp_binary(engine, kChain, 0, 2), PathError);
  EXPECT_THROW(max_prefix_sp_gallop(engine, kChain, 3, 2), PathError);
  EXPECT_THROW(max_prefix_sp_gallop(engine, kChain, 1, 5), PathError);
}

TEST(PrefixSearchTest, GallopProbeSequence) {
  std::vector<std::size_t> probes;
  auto always = [&](std::size_t first, std::size_t last) {
    EXPECT_EQ(first, 1u);
    probes.push_back(last);
    return true;
  };
  EXPECT_EQ(max_unique_prefix_gallop(always, 1, 4), 4u);
  EXPECT_EQ(probes, (std::vector<std::size_t>{1, 2, 4}));

  probes.clear();
  EXPECT_EQ(max_unique_prefix_gallop(always, 1, 6), 6u);
  EXPECT_EQ(probes, (std::vector<std::size_t>{1, 2, 4, 6}));
}

// Threshold predicates model a prefix-closed oracle: edges first..last are
// unique iff last < breaks[first], with breaks non-decreasing so that
// sub-ranges of unique ranges stay unique. Both searches must find breaks[first]-1
// clamped into range, and every via scan must equal the linear scan.
TEST(PrefixSearchTest, SyntheticThresholdsMatchBruteForce) {
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, 60));
    std::vector<std::size_t> breaks(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      auto drawn = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(i),
                                                    static_cast<std::int64_t>(n + 1)));
      breaks[i] = std::max(breaks[i - 1], drawn);
    }
    std::size_t calls = 0;
    auto unique = [&](std::size_t first, std::size_t last) {
      ++calls;
      return last < breaks[first];
    };
    auto first = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n)));
    auto last = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(first),
                                                 static_cast<std::int64_t>(n)));
    std::size_t expected = first - 1;
    while (expected < last && unique(first, expected + 1)) ++expected;
    EXPECT_EQ(max_unique_prefix_binary(unique, first, last), expected);
    EXPECT_EQ(max_unique_prefix_gallop(unique, first, last), expected);

    calls = 0;
    auto linear = via_positions(unique, n, PrefixSearch::kLinear);
    EXPECT_EQ(calls, n);
    EXPECT_EQ(via_positions(unique, n, PrefixSearch::kBinary), linear);
    EXPECT_EQ(via_positions(unique, n, PrefixSearch::kGallop), linear);
  }
}

}  // namespace
}  // namespace routezip
