#include "routezip/via.hpp"

#include "routezip/error.hpp"

namespace routezip {

namespace {

/// Prefix-sum view of a path so that segment queries cost O(1) to set up.
class SegmentOracle {
 public:
  SegmentOracle(ShortestPathEngine& engine, const Path& p) : engine_(engine), nodes_(p.nodes()) {
    if (p.empty()) {
      throw PathError("cannot compress an empty path");
    }
    if (auto v = validate_path(engine.graph(), p)) {
      throw PathError("invalid path at position " + std::to_string(v->position));
    }
    prefix_.reserve(p.size() + 1);
    prefix_.push_back(Cost(0));
    for (const EdgeRef& e : p) {
      prefix_.push_back(prefix_.back() + Cost(*engine.graph().weight(e)));
    }
  }

  // edges first..last, 1-based inclusive: nodes u_first .. u_{last+1}
  bool operator()(std::size_t first, std::size_t last) {
    Cost cost(prefix_[last].value() - prefix_[first - 1].value());
    return engine_.is_unique_between(nodes_[first - 1], nodes_[last], cost);
  }

 private:
  ShortestPathEngine& engine_;
  std::vector<NodeId> nodes_;
  std::vector<Cost> prefix_;
};

void check_bracket(const Path& p, std::size_t j, std::size_t k) {
  if (j < 1 || j > k || k > p.size()) {
    throw PathError("prefix search bracket out of range");
  }
}

void append_gap(ShortestPathEngine& engine, NodeId s, NodeId t, Path& out) {
  out.append(unique_gap(engine, s, t));
}

}  // namespace

Path unique_gap(ShortestPathEngine& engine, NodeId s, NodeId t) {
  if (s == t) return {};
  SpResult r = engine.query(s, t);
  if (r.multiplicity == 0) {
    throw IntegrityError("gap " + std::to_string(s) + "->" + std::to_string(t) + " is unreachable");
  }
  if (r.multiplicity != 1) {
    throw IntegrityError("gap " + std::to_string(s) + "->" + std::to_string(t) +
                         " has more than one shortest path");
  }
  return std::move(*r.witness);
}

ViaEdgeRepr via_edges(ShortestPathEngine& engine, const Path& p, PrefixSearch search) {
  SegmentOracle oracle(engine, p);
  ViaEdgeRepr r{p.source(), p.target(), {}};
  for (std::size_t pos : via_positions(oracle, p.size(), search)) {
    r.vias.push_back(p[pos - 1]);
  }
  return r;
}

ViaEdgeRepr via_edges_linear(ShortestPathEngine& engine, const Path& p) {
  return via_edges(engine, p, PrefixSearch::kLinear);
}

ViaEdgeRepr via_edges_binary(ShortestPathEngine& engine, const Path& p) {
  return via_edges(engine, p, PrefixSearch::kBinary);
}

ViaEdgeRepr via_edges_gallop(ShortestPathEngine& engine, const Path& p) {
  return via_edges(engine, p, PrefixSearch::kGallop);
}

std::size_t max_prefix_sp_binary(ShortestPathEngine& engine, const Path& p, std::size_t j,
                                 std::size_t k) {
  check_bracket(p, j, k);
  SegmentOracle oracle(engine, p);
  return max_unique_prefix_binary(oracle, j, k);
}

std::size_t max_prefix_sp_gallop(ShortestPathEngine& engine, const Path& p, std::size_t j,
                                 std::size_t k) {
  check_bracket(p, j, k);
  SegmentOracle oracle(engine, p);
  return max_unique_prefix_gallop(oracle, j, k);
}

Path decompress_via_edges(ShortestPathEngine& engine, const ViaEdgeRepr& r) {
  const Graph& g = engine.graph();
  if (r.source >= g.node_count() || r.target >= g.node_count()) {
    throw IntegrityError("route endpoints outside the graph");
  }
  Path out;
  NodeId anchor = r.source;
  for (const EdgeRef& via : r.vias) {
    if (!g.has_edge(via)) {
      throw IntegrityError("via edge (" + std::to_string(via.tail) + "," + std::to_string(via.head) +
                           ") is not in the graph");
    }
    append_gap(engine, anchor, via.tail, out);
    out.push_back(via);
    anchor = via.head;
  }
  append_gap(engine, anchor, r.target, out);
  return out;
}

ViaNodeRepr via_nodes(ShortestPathEngine& split_engine, const Path& p) {
  SegmentOracle oracle(split_engine, p);
  std::vector<std::size_t> anchors;
  if (!anchor_positions(oracle, p.size(), anchors)) {
    throw IntegrityError("path has an edge that is not a unique shortest path; "
                         "via nodes need a split graph");
  }
  auto nodes = p.nodes();
  ViaNodeRepr r{p.source(), p.target(), {}};
  for (std::size_t pos : anchors) {
    r.vias.push_back(nodes[pos - 1]);
  }
  return r;
}

Path decompress_via_nodes(ShortestPathEngine& split_engine, const ViaNodeRepr& r) {
  const Graph& g = split_engine.graph();
  if (r.source >= g.node_count() || r.target >= g.node_count()) {
    throw IntegrityError("route endpoints outside the graph");
  }
  Path out;
  NodeId anchor = r.source;
  for (NodeId via : r.vias) {
    if (via >= g.node_count()) throw IntegrityError("via node outside the graph");
    if (via == anchor) throw IntegrityError("repeated via node");
    append_gap(split_engine, anchor, via, out);
    anchor = via;
  }
  append_gap(split_engine, anchor, r.target, out);
  return out;
}

}  // namespace routezip
