// routezip: generate instances, preprocess graphs, compress and decompress
// routes, and benchmark all methods.
//
// Exit codes: 0 success, 1 usage, 2 I/O or format, 3 integrity.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "routezip/bench.hpp"
#include "routezip/codec.hpp"
#include "routezip/dimacs.hpp"
#include "routezip/error.hpp"
#include "routezip/hierarchy.hpp"
#include "routezip/instances.hpp"
#include "routezip/pipeline.hpp"
#include "routezip/via.hpp"

namespace {

using namespace routezip;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kIntegrity = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

// Runs `fn` and rewraps library errors about the file's contents as input
// errors, so they exit with the I/O code.
template <class Fn>
auto reading(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const IntegrityError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct LoadedGraph {
  Graph graph;
  std::optional<NodeId> split_original_nodes;
};

LoadedGraph load_graph(const std::string& path) {
  auto in = open_in(path);
  return reading(path, [&] {
    std::vector<std::string> comments;
    LoadedGraph g{load_dimacs(in, &comments), std::nullopt};
    g.split_original_nodes = parse_split_marker(comments);
    return g;
  });
}

Path load_path_file(const std::string& path) {
  auto in = open_in(path);
  return reading(path, [&] { return load_path(in); });
}

Hierarchy load_hierarchy_file(const std::string& path) {
  auto in = open_in(path, std::ios::binary);
  return reading(path, [&] { return load_hierarchy(in); });
}

template <class Fn>
void write_output(const std::string& path, bool binary, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw InputError("cannot write '" + path + "'");
  fn(out);
  if (!out) throw InputError("failed writing '" + path + "'");
}

struct GenOptions {
  std::string kind = "grid";
  NodeId width = 10;
  NodeId height = 10;
  std::uint64_t seed = 0;
  std::string weights = "unit";
  std::string out;
};

void run_gen(const GenOptions& o) {
  WeightRange weights;
  try {
    weights = parse_weights(o.weights);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Graph g;
  if (o.kind == "grid") {
    if (o.width == 0 || o.height == 0) throw UsageError("grid needs --width and --height >= 1");
    g = make_grid(o.width, o.height, weights, o.seed);
  } else if (o.kind == "chain") {
    if (o.width == 0) throw UsageError("chain needs --width >= 1");
    g = make_chain(o.width, weights, o.seed);
  } else {
    g = make_diamond();
  }
  write_output(o.out, false, [&](std::ostream& out) { write_dimacs(out, g); });
}

struct GenPathOptions {
  std::string graph;
  std::uint64_t seed = 0;
  std::size_t length = 0;
  std::string kind = "walk";
  std::size_t detours = 0;
  std::string out;
};

void run_genpath(const GenPathOptions& o) {
  LoadedGraph loaded = load_graph(o.graph);
  if (o.length == 0) throw UsageError("--len must be at least 1 (empty paths are not routes)");
  Rng rng(o.seed);
  Path p;
  try {
    if (o.kind == "walk") {
      p = random_walk(loaded.graph, o.length, rng);
    } else {
      ShortestPathEngine engine(loaded.graph);
      p = perturbed_sp_path(engine, o.length, o.detours, rng);
    }
  } catch (const PathError& e) {
    throw UsageError(e.what());
  }
  write_output(o.out, false, [&](std::ostream& out) { write_path(out, p); });
}

struct PreprocessOptions {
  std::string what;
  std::string graph;
  std::string out;
  BuildParams params;
};

void run_preprocess(const PreprocessOptions& o) {
  LoadedGraph loaded = load_graph(o.graph);
  if (o.what == "split") {
    if (loaded.split_original_nodes) throw UsageError("graph is already split");
    SplitGraph split = split_non_unique_edges(loaded.graph);
    std::vector<std::string> comments{split_marker_comment(loaded.graph.node_count())};
    write_output(o.out, false, [&](std::ostream& out) { write_dimacs(out, split.graph, comments); });
    std::cerr << "split " << split.mapping.split_edges().size() << " of "
              << loaded.graph.edge_count() << " edges\n";
  } else {
    Hierarchy h = build_hierarchy(loaded.graph, o.params);
    write_output(o.out, true, [&](std::ostream& out) { save_hierarchy(out, h); });
    std::cerr << "hierarchy: " << h.shortcut_count() << " shortcuts, max degree "
              << h.max_degree() << '\n';
  }
}

// Loads what a method needs. A split graph on --graph serves via nodes; the
// original graph is the one the split graph came from and is not needed.
struct Inputs {
  std::optional<Graph> graph;
  std::optional<SplitGraph> split;
  std::optional<Hierarchy> hierarchy;
};

Inputs load_inputs(const std::string& graph_path, const std::string& ch_path, bool want_split) {
  Inputs inputs;
  LoadedGraph loaded = load_graph(graph_path);
  if (loaded.split_original_nodes) {
    NodeId original = *loaded.split_original_nodes;
    SplitMapping mapping =
        reading(graph_path, [&] { return SplitMapping::recover(loaded.graph, original); });
    inputs.split = SplitGraph{std::move(loaded.graph), std::move(mapping)};
  } else {
    if (want_split) {
      throw UsageError("via nodes need a split graph; run 'preprocess split' first");
    }
    inputs.graph = std::move(loaded.graph);
  }
  if (!ch_path.empty()) inputs.hierarchy = load_hierarchy_file(ch_path);
  return inputs;
}

RoutePipeline make_pipeline(const Inputs& inputs) {
  return RoutePipeline(inputs.graph ? &*inputs.graph : nullptr,
                       inputs.hierarchy ? &*inputs.hierarchy : nullptr,
                       inputs.split ? &*inputs.split : nullptr);
}

struct CompressOptions {
  std::string method;
  std::string graph;
  std::string ch;
  std::string path;
  std::string out;
};

void run_compress(const CompressOptions& o) {
  auto method = parse_method(o.method);
  if (!method) throw UsageError("unknown method '" + o.method + "'");
  bool needs_ch = *method == CompressMethod::kCh || *method == CompressMethod::kCombined;
  if (needs_ch && o.ch.empty()) throw UsageError("method " + o.method + " needs --ch");
  Inputs inputs = load_inputs(o.graph, o.ch, *method == CompressMethod::kViaNodes);
  if (*method != CompressMethod::kViaNodes && !inputs.graph) {
    throw UsageError("method " + o.method + " needs the original (unsplit) graph");
  }
  Path p = load_path_file(o.path);
  RoutePipeline pipeline = make_pipeline(inputs);
  RouteMessage m;
  try {
    m = pipeline.compress(*method, p);
  } catch (const PathError& e) {
    throw InputError(o.path + ": " + e.what());
  }
  std::vector<std::uint8_t> bytes = encode(m);
  write_output(o.out, true, [&](std::ostream& out) {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  });
  std::cerr << o.method << ": " << p.size() << " edges -> "
            << (m.method == Method::kViaNodes ? m.nodes.size() : m.arcs.size()) << " items, "
            << bytes.size() << " bytes, " << pipeline.queries() << " queries\n";
}

struct DecompressOptions {
  std::string message;
  std::string graph;
  std::string ch;
  std::string out;
};

void run_decompress(const DecompressOptions& o) {
  auto in = open_in(o.message, std::ios::binary);
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), {}};
  RouteMessage m = reading(o.message, [&] { return decode(bytes); });
  bool needs_ch = m.method == Method::kChPath || m.method == Method::kCombined;
  if (needs_ch && o.ch.empty()) throw UsageError(std::string(to_string(m.method)) + " messages need --ch");
  Inputs inputs = load_inputs(o.graph, o.ch, m.method == Method::kViaNodes);
  RoutePipeline pipeline = make_pipeline(inputs);
  Path p = pipeline.decompress(m);
  write_output(o.out, false, [&](std::ostream& out) { write_path(out, p); });
}

struct BenchOptions {
  bool all = false;
  BenchConfig config;
  std::string weights = "random:1..100";
};

void run_bench_cmd(BenchOptions o) {
  if (!o.all) throw UsageError("bench currently supports only --all");
  try {
    o.config.weights = parse_weights(o.weights);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (o.config.min_length == 0 || o.config.max_length < o.config.min_length) {
    throw UsageError("need 1 <= --min-len <= --max-len");
  }
  BenchReport report = run_bench(o.config);
  report.write_tsv(std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Route compression with via edges and contraction hierarchies"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic graph (.gr)");
  gen_cmd->add_option("--kind", gen.kind)->check(CLI::IsMember({"grid", "chain", "diamond"}));
  gen_cmd->add_option("--width", gen.width);
  gen_cmd->add_option("--height", gen.height);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--weights", gen.weights, "unit or random:LO..HI");
  gen_cmd->add_option("--out", gen.out);

  GenPathOptions genpath;
  auto* genpath_cmd = app.add_subcommand("genpath", "generate a seeded path (.path)");
  genpath_cmd->add_option("--graph", genpath.graph)->required();
  genpath_cmd->add_option("--seed", genpath.seed);
  genpath_cmd->add_option("--len", genpath.length)->required();
  genpath_cmd->add_option("--kind", genpath.kind)->check(CLI::IsMember({"walk", "perturbed-sp"}));
  genpath_cmd->add_option("--detours", genpath.detours);
  genpath_cmd->add_option("--out", genpath.out);

  PreprocessOptions pre;
  auto* pre_cmd = app.add_subcommand("preprocess", "split edges (.gr) or build a hierarchy (.chr)");
  pre_cmd->add_option("what", pre.what)->required()->check(CLI::IsMember({"split", "ch"}));
  pre_cmd->add_option("--graph", pre.graph)->required();
  pre_cmd->add_option("--out", pre.out);
  pre_cmd->add_option("--hop-limit", pre.params.hop_limit);
  pre_cmd->add_option("--settle-limit", pre.params.settle_limit);

  CompressOptions comp;
  auto* comp_cmd = app.add_subcommand("compress", "compress a path into a route message");
  comp_cmd->add_option("--method", comp.method)
      ->required()
      ->check(CLI::IsMember({"via-linear", "via-binary", "via-gallop", "via-nodes", "ch", "combined"}));
  comp_cmd->add_option("--graph", comp.graph)->required();
  comp_cmd->add_option("--ch", comp.ch);
  comp_cmd->add_option("--path", comp.path)->required();
  comp_cmd->add_option("--out", comp.out);

  DecompressOptions decomp;
  auto* decomp_cmd = app.add_subcommand("decompress", "reconstruct a path from a route message");
  decomp_cmd->add_option("--message", decomp.message)->required();
  decomp_cmd->add_option("--graph", decomp.graph)->required();
  decomp_cmd->add_option("--ch", decomp.ch);
  decomp_cmd->add_option("--out", decomp.out);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark every method, TSV on stdout");
  bench_cmd->add_flag("--all", bench.all);
  bench_cmd->add_option("--width", bench.config.width);
  bench_cmd->add_option("--height", bench.config.height);
  bench_cmd->add_option("--weights", bench.weights);
  bench_cmd->add_option("--seed", bench.config.seed);
  bench_cmd->add_option("--paths", bench.config.paths);
  bench_cmd->add_option("--min-len", bench.config.min_length);
  bench_cmd->add_option("--max-len", bench.config.max_length);
  bench_cmd->add_option("--threads", bench.config.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) run_gen(gen);
    if (*genpath_cmd) run_genpath(genpath);
    if (*pre_cmd) run_preprocess(pre);
    if (*comp_cmd) run_compress(comp);
    if (*decomp_cmd) run_decompress(decomp);
    if (*bench_cmd) run_bench_cmd(bench);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const MissingInputError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
