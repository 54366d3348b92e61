#include "routezip/pipeline.hpp"

#include "routezip/error.hpp"

namespace routezip {

namespace {

RouteMessage via_message(const ViaEdgeRepr& r) {
  RouteMessage m;
  m.method = Method::kViaEdges;
  m.source = r.source;
  m.target = r.target;
  for (const EdgeRef& e : r.vias) m.arcs.push_back({e.tail, e.head, false});
  return m;
}

void check_endpoints(const Path& p, const RouteMessage& m) {
  if (p.empty() || p.source() != m.source || p.target() != m.target) {
    throw IntegrityError("decompressed route does not connect the message endpoints");
  }
}

}  // namespace

std::optional<CompressMethod> parse_method(std::string_view name) {
  for (CompressMethod m : kAllMethods) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

const char* to_string(CompressMethod m) {
  switch (m) {
    case CompressMethod::kViaLinear: return "via-linear";
    case CompressMethod::kViaBinary: return "via-binary";
    case CompressMethod::kViaGallop: return "via-gallop";
    case CompressMethod::kViaNodes: return "via-nodes";
    case CompressMethod::kCh: return "ch";
    case CompressMethod::kCombined: return "combined";
  }
  return "unknown";
}

Method wire_method(CompressMethod m) {
  switch (m) {
    case CompressMethod::kViaNodes: return Method::kViaNodes;
    case CompressMethod::kCh: return Method::kChPath;
    case CompressMethod::kCombined: return Method::kCombined;
    default: return Method::kViaEdges;
  }
}

RoutePipeline::RoutePipeline(const Graph* graph, const Hierarchy* hierarchy, const SplitGraph* split)
    : graph_(graph), hierarchy_(hierarchy), split_(split) {
  if (graph_) graph_engine_ = std::make_unique<ShortestPathEngine>(*graph_);
  if (split_) split_engine_ = std::make_unique<ShortestPathEngine>(split_->graph);
}

ShortestPathEngine& RoutePipeline::graph_engine() {
  if (!graph_engine_) throw MissingInputError("this method needs the road graph");
  return *graph_engine_;
}

ShortestPathEngine& RoutePipeline::split_engine() {
  if (!split_engine_) throw MissingInputError("via nodes need a split-preprocessed graph");
  return *split_engine_;
}

const Hierarchy& RoutePipeline::hierarchy() const {
  if (!hierarchy_) throw MissingInputError("this method needs a contraction hierarchy");
  return *hierarchy_;
}

std::uint64_t RoutePipeline::map_version(Method m) const {
  switch (m) {
    case Method::kViaEdges:
      if (!graph_) throw MissingInputError("this method needs the road graph");
      return graph_->fingerprint();
    case Method::kViaNodes:
      if (!split_) throw MissingInputError("via nodes need a split-preprocessed graph");
      return split_->graph.fingerprint();
    case Method::kChPath:
    case Method::kCombined:
      return hierarchy().fingerprint();
  }
  throw VersionError("unknown method");
}

void RoutePipeline::check_version(const RouteMessage& m) const {
  if (m.map_version != map_version(m.method)) {
    throw IntegrityError("message was made for different map data");
  }
}

RouteMessage RoutePipeline::compress(CompressMethod method, const Path& p) {
  RouteMessage m;
  switch (method) {
    case CompressMethod::kViaLinear:
      m = via_message(via_edges_linear(graph_engine(), p));
      break;
    case CompressMethod::kViaBinary:
      m = via_message(via_edges_binary(graph_engine(), p));
      break;
    case CompressMethod::kViaGallop:
      m = via_message(via_edges_gallop(graph_engine(), p));
      break;
    case CompressMethod::kViaNodes: {
      ShortestPathEngine& engine = split_engine();
      ViaNodeRepr r = via_nodes(engine, split_->mapping.lift(p));
      m.method = Method::kViaNodes;
      m.source = r.source;
      m.target = r.target;
      m.nodes = std::move(r.vias);
      break;
    }
    case CompressMethod::kCh: {
      if (!graph_) throw MissingInputError("this method needs the road graph");
      if (p.empty()) throw PathError("cannot compress an empty path");
      if (auto v = validate_path(*graph_, p)) {
        throw PathError("invalid path at position " + std::to_string(v->position));
      }
      m.method = Method::kChPath;
      m.source = p.source();
      m.target = p.target();
      m.arcs = compress_with_ch(hierarchy(), p);
      break;
    }
    case CompressMethod::kCombined: {
      CombinedRepr r = compress_combined(hierarchy(), graph_engine(), p);
      m.method = Method::kCombined;
      m.source = r.source;
      m.target = r.target;
      m.arcs = std::move(r.vias);
      break;
    }
  }
  m.map_version = map_version(m.method);
  return m;
}

Path RoutePipeline::decompress(const RouteMessage& m) {
  check_version(m);
  Path p;
  switch (m.method) {
    case Method::kViaEdges: {
      ViaEdgeRepr r{m.source, m.target, {}};
      for (const ChArc& a : m.arcs) r.vias.push_back({a.tail, a.head});
      p = decompress_via_edges(graph_engine(), r);
      break;
    }
    case Method::kViaNodes: {
      ShortestPathEngine& engine = split_engine();
      p = split_->mapping.project(decompress_via_nodes(engine, {m.source, m.target, m.nodes}));
      break;
    }
    case Method::kChPath:
      for (std::size_t i = 1; i < m.arcs.size(); ++i) {
        if (m.arcs[i - 1].head != m.arcs[i].tail) throw IntegrityError("arcs are not consecutive");
      }
      p = unpack(hierarchy(), m.arcs);
      break;
    case Method::kCombined:
      p = decompress_combined(hierarchy(), graph_engine(), {m.source, m.target, m.arcs});
      break;
  }
  check_endpoints(p, m);
  return p;
}

std::size_t RoutePipeline::queries() const {
  return (graph_engine_ ? graph_engine_->query_counter() : 0) +
         (split_engine_ ? split_engine_->query_counter() : 0);
}

void RoutePipeline::reset_queries() {
  if (graph_engine_) graph_engine_->reset_query_counter();
  if (split_engine_) split_engine_->reset_query_counter();
}

}  // namespace routezip
