// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "golden_messages.hpp"
#include "oracles.hpp"
#include "routezip/bench.hpp"
#include "routezip/error.hpp"
#include "routezip/hierarchy.hpp"
#include "routezip/instances.hpp"
#include "routezip/pipeline.hpp"
#include "routezip/shortest_path.hpp"
#include "routezip/via.hpp"

namespace routezip {
namespace {

using namespace routezip::testing;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // Records the first failure only; later ones would just repeat it.
  void fail(const std::string& why) {
    if (ok) detail << "first failure: " << why << "; ";
    ok = false;
  }
};

struct GridInstance {
  Graph graph;
  Hierarchy hierarchy;
  SplitGraph split;
  std::vector<Path> paths;
};

std::vector<GridInstance> build_grid_instances() {
  std::vector<GridInstance> grids;
  for (NodeId side : {20u, 50u}) {
    GridInstance inst;
    inst.graph = make_grid(side, side, {1, 100}, side);
    inst.hierarchy = build_hierarchy(inst.graph);
    inst.split = split_non_unique_edges(inst.graph);
    inst.paths = bench_paths(inst.graph, 500, 1, 500, 1000 + side);
    grids.push_back(std::move(inst));
  }
  return grids;
}

// Criteria 1, 2, 3 and 8 share the same 1000 instances.
struct SharedRun {
  Outcome roundtrip, sizes, equivalence, fixed_point;
  // Criterion 6's gallop-below-linear clause, evaluated on every instance
  // here with |Q| <= 10 and |P| >= 300.
  Outcome gallop_vs_linear;
  std::size_t few_vias = 0;
  double seconds = 0;
};

SharedRun run_grid_criteria(const std::vector<GridInstance>& grids) {
  SharedRun run;
  std::size_t paths = 0, checks = 0;
  auto start = std::chrono::steady_clock::now();
  for (const GridInstance& inst : grids) {
    RoutePipeline pipeline(&inst.graph, &inst.hierarchy, &inst.split);
    ShortestPathEngine engine(inst.graph);
    for (std::size_t id = 0; id < inst.paths.size(); ++id) {
      const Path& p = inst.paths[id];
      std::string where = "grid " + std::to_string(inst.graph.node_count()) + " path " +
                          std::to_string(id);
      ++paths;
      for (CompressMethod method : kAllMethods) {
        ++checks;
        try {
          RouteMessage sent = pipeline.compress(method, p);
          Path back = pipeline.decompress(decode(encode(sent)));
          if (back != p) run.roundtrip.fail(where + " " + to_string(method));
        } catch (const Error& err) {
          run.roundtrip.fail(where + " " + to_string(method) + ": " + err.what());
        }
      }

      engine.reset_query_counter();
      ViaEdgeRepr linear = via_edges_linear(engine, p);
      std::size_t linear_queries = engine.query_counter();
      ViaEdgeRepr binary = via_edges_binary(engine, p);
      engine.reset_query_counter();
      ViaEdgeRepr gallop = via_edges_gallop(engine, p);
      std::size_t gallop_queries = engine.query_counter();
      if (!(linear == binary && binary == gallop)) run.equivalence.fail(where);
      if (linear.vias.size() <= 10 && p.size() >= 300) {
        ++run.few_vias;
        if (gallop_queries >= linear_queries) run.gallop_vs_linear.fail(where);
      }

      ChPath contracted = compress_with_ch(inst.hierarchy, p);
      if (linear.vias.size() > p.size()) run.sizes.fail(where + " |Q| > |P|");
      if (contracted.size() > p.size()) run.sizes.fail(where + " |P'| > |P|");
      if (compress_with_ch(inst.hierarchy, contracted) != contracted) run.fixed_point.fail(where);
    }
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  run.roundtrip.detail << paths << " paths, " << checks << " method roundtrips, " << run.seconds
                       << " s";
  if (run.seconds >= 60) run.roundtrip.fail("took longer than 60 s");
  run.sizes.detail << paths << " paths checked for |Q| <= |P| and |P'| <= |P|";
  run.equivalence.detail << paths << " paths, linear = binary = gallop";
  run.fixed_point.detail << paths << " contracted paths re-compressed";
  return run;
}

// All-pairs shortest distance and path count by enumeration.
std::vector<std::vector<Counted>> all_pairs_counts(const Graph& g) {
  std::vector<std::vector<Counted>> table(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    for (NodeId t = 0; t < g.node_count(); ++t) table[s].push_back(enumerate_shortest(g, s, t));
  }
  return table;
}

// Smallest subsequence of p whose gaps are unique shortest paths, by trying
// every subset; uses the enumeration table for the gap checks.
std::size_t min_vias(const Graph& g, const std::vector<std::vector<Counted>>& table, const Path& p) {
  std::size_t n = p.size();
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + *g.weight(p[i]);
  auto unique = [&](std::size_t i, std::size_t j) {  // edges i..j-1
    if (i == j) return true;
    const Counted& c = table[p[i].tail][p[j - 1].head];
    return c.count == 1 && c.distance == prefix[j] - prefix[i];
  };
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    std::size_t gap = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i) & 1u) {
        ok = unique(gap, i);
        gap = i + 1;
      }
    }
    if (ok && unique(gap, n)) best = size;
  }
  return best;
}

Outcome criterion_minimality() {
  Outcome out;
  Rng rng(4);
  std::size_t graphs = 0, paths = 0;
  for (; graphs < 200; ++graphs) {
    auto n = static_cast<NodeId>(uniform(rng, 2, 8));
    double density = 0.2 + 0.05 * static_cast<double>(uniform(rng, 0, 6));
    Graph g = make_random_graph(n, density, {1, 3}, rng);
    auto table = all_pairs_counts(g);
    ShortestPathEngine engine(g);
    for (const Path& p : simple_paths(g, 10)) {
      ++paths;
      std::size_t got = via_edges_linear(engine, p).vias.size();
      std::size_t expected = min_vias(g, table, p);
      if (got != expected) {
        out.fail("graph " + std::to_string(graphs) + ": |Q|=" + std::to_string(got) +
                 " but minimum is " + std::to_string(expected));
      }
    }
  }
  out.detail << graphs << " graphs, " << paths << " simple paths";
  return out;
}

Outcome criterion_multiplicity() {
  Outcome out;
  Rng rng(5);
  std::size_t pairs = 0, ambiguous = 0;
  for (int graph = 0; graph < 500; ++graph) {
    auto n = static_cast<NodeId>(uniform(rng, 1, 10));
    double density = 0.15 + 0.05 * static_cast<double>(uniform(rng, 0, 5));
    Graph g = make_random_graph(n, density, {1, 3}, rng);
    ShortestPathEngine engine(g);
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        ++pairs;
        Counted expected = enumerate_shortest(g, s, t);
        SpResult got = engine.query(s, t);
        auto capped = static_cast<std::uint8_t>(std::min<std::uint64_t>(expected.count, 2));
        if (capped == 2) ++ambiguous;
        bool distance_ok = expected.count == 0 ? got.distance.is_infinite()
                                               : got.distance == Cost(expected.distance);
        if (got.multiplicity != capped || !distance_ok) {
          out.fail("graph " + std::to_string(graph) + " pair " + std::to_string(s) + "->" +
                   std::to_string(t));
        }
      }
    }
  }
  out.detail << "500 graphs, " << pairs << " pairs, " << ambiguous << " with several shortest paths";
  return out;
}

Outcome criterion_query_counts(const SharedRun& grid_run) {
  Outcome out;
  if (!grid_run.gallop_vs_linear.ok) out.fail(grid_run.gallop_vs_linear.detail.str());
  Graph g = make_grid(50, 50, {1, 100}, 6);
  ShortestPathEngine engine(g);
  Rng rng(6);
  std::size_t few_vias = 0;
  std::size_t linear_total = 0, binary_total = 0, gallop_total = 0;
  for (int id = 0; id < 100; ++id) {
    Path p = id % 2 == 0 ? random_walk(g, 500, rng)
                         : perturbed_sp_path(engine, 500, static_cast<std::size_t>(id % 5), rng);
    if (p.size() != 500) {
      out.fail("path " + std::to_string(id) + " has " + std::to_string(p.size()) + " edges");
      continue;
    }
    engine.reset_query_counter();
    std::size_t q = via_edges_linear(engine, p).vias.size();
    std::size_t linear = engine.query_counter();
    engine.reset_query_counter();
    via_edges_binary(engine, p);
    std::size_t binary = engine.query_counter();
    engine.reset_query_counter();
    via_edges_gallop(engine, p);
    std::size_t gallop = engine.query_counter();
    linear_total += linear;
    binary_total += binary;
    gallop_total += gallop;

    const double n = 500.0, qd = static_cast<double>(q);
    double binary_bound = 2 * (qd + 1) * (std::ceil(std::log2(n)) + 1);
    double gallop_bound = 4 * (qd + 1) * (std::ceil(std::log2(n / std::max(qd, 1.0))) + 2);
    std::string where = "path " + std::to_string(id) + " |Q|=" + std::to_string(q);
    if (linear != p.size()) out.fail(where + " linear issued " + std::to_string(linear));
    if (static_cast<double>(binary) > binary_bound) out.fail(where + " binary " + std::to_string(binary));
    if (static_cast<double>(gallop) > gallop_bound) out.fail(where + " gallop " + std::to_string(gallop));
    if (q <= 10) {
      ++few_vias;
      if (gallop >= linear) out.fail(where + " gallop not below linear");
    }
  }
  if (few_vias + grid_run.few_vias == 0) out.fail("no instance with |Q| <= 10");
  out.detail << "100 paths of 500 edges, mean queries linear " << linear_total / 100 << " binary "
             << binary_total / 100 << " gallop " << gallop_total / 100
             << "; gallop < linear on " << few_vias + grid_run.few_vias
             << " instances with |Q| <= 10 and |P| >= 300";
  return out;
}

Outcome criterion_ch_distances() {
  Outcome out;
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.emplace_back("grid 20x20", make_grid(20, 20, {1, 100}, 20));
  graphs.emplace_back("grid 50x50", make_grid(50, 50, {1, 100}, 50));
  graphs.emplace_back("unit grid 30x30", make_grid(30, 30, {1, 1}, 1));
  Rng graph_rng(7);
  graphs.emplace_back("random 300", make_random_graph(300, 0.01, {1, 20}, graph_rng));
  std::size_t pairs = 0;
  for (const auto& [name, g] : graphs) {
    Hierarchy h = build_hierarchy(g);
    ShortestPathEngine engine(g);
    Rng rng(70 + pairs);
    const auto last = static_cast<std::int64_t>(g.node_count()) - 1;
    for (int i = 0; i < 1000; ++i, ++pairs) {
      auto s = static_cast<NodeId>(uniform(rng, 0, last));
      auto t = static_cast<NodeId>(uniform(rng, 0, last));
      if (ch_query(h, s, t).distance != engine.query(s, t).distance) {
        out.fail(name + " pair " + std::to_string(s) + "->" + std::to_string(t));
      }
    }
  }
  out.detail << graphs.size() << " graphs, " << pairs << " pairs";
  return out;
}

Outcome criterion_split() {
  Outcome out;
  Rng rng(9);
  std::size_t graphs = 0, edges = 0, midpoints = 0;
  auto check = [&](const Graph& g, const std::string& name) {
    ++graphs;
    SplitGraph split = split_non_unique_edges(g);
    midpoints += split.mapping.split_edges().size();
    ShortestPathEngine engine(split.graph);
    for (const Arc& arc : split.graph.arcs()) {
      ++edges;
      if (!engine.is_unique_sp(Path({{arc.tail, arc.head}}))) {
        out.fail(name + " edge " + std::to_string(arc.tail) + "->" + std::to_string(arc.head));
      }
    }
    auto before = floyd_warshall(g);
    auto after = floyd_warshall(split.graph);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      for (NodeId t = 0; t < g.node_count(); ++t) {
        bool ok = before[s][t] == kNoPath ? after[s][t] == kNoPath : after[s][t] == 2 * before[s][t];
        if (!ok) out.fail(name + " distance " + std::to_string(s) + "->" + std::to_string(t));
      }
    }
  };
  check(make_grid(10, 10, {1, 1}, 1), "unit grid 10x10");
  check(make_grid(10, 10, {1, 3}, 2), "grid 10x10");
  for (int i = 0; i < 40; ++i) {
    auto n = static_cast<NodeId>(uniform(rng, 2, 100));
    check(make_random_graph(n, 4.0 / n, {1, 4}, rng), "random " + std::to_string(i));
  }
  out.detail << graphs << " graphs, " << edges << " split-graph edges, " << midpoints
             << " edges split";
  return out;
}

Outcome criterion_codec() {
  Outcome out;
  for (const auto& golden : golden_cases()) {
    auto bytes = read_golden(ROUTEZIP_GOLDEN_DIR, golden.file);
    if (bytes.empty()) out.fail(std::string("missing ") + golden.file);
    if (encode(golden.message) != bytes) out.fail(std::string("encode ") + golden.file);
    try {
      if (!(decode(bytes) == golden.message)) out.fail(std::string("decode ") + golden.file);
    } catch (const Error& err) {
      out.fail(std::string("decode ") + golden.file + ": " + err.what());
    }
  }

  Rng rng(10);
  auto id = [&rng]() -> NodeId {
    return uniform(rng, 0, 3) == 0 ? static_cast<NodeId>(uniform(rng, 0, 0xfffffffe))
                                   : static_cast<NodeId>(uniform(rng, 0, 100000));
  };
  for (int i = 0; i < 10000; ++i) {
    RouteMessage m;
    m.map_version = rng();
    m.method = static_cast<Method>(uniform(rng, 0, 3));
    m.source = id();
    m.target = id();
    auto k = uniform(rng, 0, 64);
    for (std::int64_t j = 0; j < k; ++j) {
      if (m.method == Method::kViaNodes) {
        m.nodes.push_back(id());
      } else {
        bool flag = m.method != Method::kViaEdges && uniform(rng, 0, 1) == 1;
        m.arcs.push_back({id(), id(), flag});
      }
    }
    if (!(decode(encode(m)) == m)) out.fail("roundtrip message " + std::to_string(i));
  }

  std::size_t rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(uniform(rng, 0, 64)));
    for (auto& byte : bytes) byte = static_cast<std::uint8_t>(rng());
    // Half the inputs start with a valid header so the body parser is hit.
    if (i % 2 == 1 && bytes.size() >= 13) {
      const std::uint8_t magic[] = {'R', 'T', 'C', '1'};
      std::copy(std::begin(magic), std::end(magic), bytes.begin());
      bytes[12] = static_cast<std::uint8_t>(uniform(rng, 0, 4));
    }
    try {
      decode(bytes);
    } catch (const FormatError&) {
      ++rejected;
    } catch (const std::exception& err) {
      out.fail(std::string("fuzz input raised ") + err.what());
    }
  }
  out.detail << "5 golden files, 10000 roundtrips, 100000 fuzz inputs (" << rejected
             << " rejected cleanly)";
  return out;
}

// A 700-edge unit chain with ten weight-2 bypasses x -> x+2. Each bypass
// ties with the chain, so the chain path needs exactly ten via edges and
// 690 edges remain in the gaps.
Outcome criterion_worked_example() {
  Outcome out;
  constexpr NodeId kEdges = 700;
  std::vector<Arc> arcs;
  for (NodeId v = 0; v < kEdges; ++v) arcs.push_back({v, v + 1, 1});
  for (NodeId i = 0; i < 10; ++i) {
    NodeId x = 30 + 64 * i;
    arcs.push_back({x, x + 2, 2});
  }
  Graph g = Graph::from_arcs(kEdges + 1, arcs);
  std::vector<NodeId> nodes(kEdges + 1);
  for (NodeId v = 0; v <= kEdges; ++v) nodes[v] = v;
  Path p = Path::from_nodes(nodes);

  ShortestPathEngine engine(g);
  ViaEdgeRepr linear = via_edges_linear(engine, p);
  engine.reset_query_counter();
  ViaEdgeRepr binary = via_edges_binary(engine, p);
  std::size_t measured = engine.query_counter();
  const std::size_t q = binary.vias.size();
  const std::size_t gap_edges = p.size() - q;

  const double log_p = std::ceil(std::log2(static_cast<double>(p.size())));
  const double bound = (static_cast<double>(q) + 1) * (log_p + 1);
  const double worked = 11 * std::log2(690.0);
  const double criterion6 = 2 * bound;

  if (q != 10 || !(linear == binary)) out.fail("instance has |Q|=" + std::to_string(q));
  if (gap_edges != 690) out.fail("gap edges " + std::to_string(gap_edges));
  if (std::round(worked) != 104) out.fail("11 log 690 = " + std::to_string(worked));
  if (bound < 104.0 / 2 || bound > 104.0 * 2) out.fail("bound " + std::to_string(bound));
  if (static_cast<double>(measured) > criterion6) out.fail("measured " + std::to_string(measured));
  if (decompress_via_edges(engine, binary) != p) out.fail("roundtrip");
  out.detail << "|P|=700 |Q|=" << q << " gap edges " << gap_edges << ", bound (|Q|+1)(ceil log|P|+1) = "
             << bound << " vs 11 log 690 = " << worked << ", measured " << measured
             << " queries <= " << criterion6;
  return out;
}

void report(int number, const char* name, const Outcome& out, bool& all_ok) {
  std::printf("criterion %2d %s: %s (%s)\n", number, out.ok ? "PASS" : "FAIL", name,
              out.detail.str().c_str());
  std::fflush(stdout);
  all_ok = all_ok && out.ok;
}

}  // namespace
}  // namespace routezip

int main() {
  using namespace routezip;
  bool all_ok = true;
  try {
    SharedRun grid_run = run_grid_criteria(build_grid_instances());
    report(1, "roundtrip exactness, six methods", grid_run.roundtrip, all_ok);
    report(2, "size bounds |Q| <= |P| and |P'| <= |P|", grid_run.sizes, all_ok);
    report(3, "via-edge algorithm equivalence", grid_run.equivalence, all_ok);
    report(4, "minimal via-edge count", criterion_minimality(), all_ok);
    report(5, "shortest path multiplicity", criterion_multiplicity(), all_ok);
    report(6, "query-count bounds", criterion_query_counts(grid_run), all_ok);
    report(7, "CH distance preservation", criterion_ch_distances(), all_ok);
    report(8, "CH compression fixed point", grid_run.fixed_point, all_ok);
    report(9, "split graph postcondition", criterion_split(), all_ok);
    report(10, "codec golden files, roundtrip, fuzz", criterion_codec(), all_ok);
    report(11, "worked-example query bound", criterion_worked_example(), all_ok);
  } catch (const std::exception& err) {
    std::printf("acceptance aborted: %s\n", err.what());
    return 1;
  }
  std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
