#include "routezip/via.hpp"

#include "routezip/error.hpp"

namespace routezip {

namespace {
constexpr std::string_view kSplitMarker = "split-original-nodes ";
}

SplitMapping::SplitMapping(NodeId original_node_count, std::vector<EdgeRef> split_edges)
    : original_node_count_(original_node_count), split_edges_(std::move(split_edges)) {
  for (std::size_t k = 0; k < split_edges_.size(); ++k) {
    midpoint_of_.emplace(detail::pack(split_edges_[k].tail, split_edges_[k].head),
                         original_node_count_ + static_cast<NodeId>(k));
  }
}

SplitMapping SplitMapping::recover(const Graph& split_graph, NodeId original_node_count) {
  if (original_node_count > split_graph.node_count()) {
    throw FormatError("split marker exceeds the node count");
  }
  std::vector<EdgeRef> edges;
  for (NodeId w = original_node_count; w < split_graph.node_count(); ++w) {
    if (split_graph.in_degree(w) != 1 || split_graph.out_degree(w) != 1) {
      throw FormatError("midpoint " + std::to_string(w) + " must have one in and one out edge");
    }
    EdgeRef e{split_graph.in_tails(w)[0], split_graph.out_heads(w)[0]};
    if (e.tail >= original_node_count || e.head >= original_node_count ||
        split_graph.in_weights(w)[0] != split_graph.out_weights(w)[0]) {
      throw FormatError("midpoint " + std::to_string(w) + " does not split an original edge");
    }
    edges.push_back(e);
  }
  SplitMapping m(original_node_count, std::move(edges));
  if (m.midpoint_of_.size() != m.split_edges_.size()) {
    throw FormatError("an original edge is split twice");
  }
  return m;
}

std::optional<NodeId> SplitMapping::midpoint(EdgeRef original) const {
  auto it = midpoint_of_.find(detail::pack(original.tail, original.head));
  if (it == midpoint_of_.end()) return std::nullopt;
  return it->second;
}

EdgeRef SplitMapping::original_edge(NodeId midpoint) const {
  return split_edges_.at(midpoint - original_node_count_);
}

Path SplitMapping::lift(const Path& original) const {
  Path out;
  for (const EdgeRef& e : original) {
    if (auto w = midpoint(e)) {
      out.push_back({e.tail, *w});
      out.push_back({*w, e.head});
    } else {
      out.push_back(e);
    }
  }
  return out;
}

Path SplitMapping::project(const Path& split) const {
  Path out;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const EdgeRef& e = split[i];
    if (is_midpoint(e.tail)) {
      throw IntegrityError("path starts inside a split edge");
    }
    if (!is_midpoint(e.head)) {
      out.push_back(e);
      continue;
    }
    if (e.head - original_node_count_ >= split_edges_.size() || i + 1 == split.size() ||
        split[i + 1].tail != e.head) {
      throw IntegrityError("path ends inside a split edge");
    }
    EdgeRef original = original_edge(e.head);
    if (original.tail != e.tail || original.head != split[i + 1].head) {
      throw IntegrityError("half edges do not belong to the same split edge");
    }
    out.push_back(original);
    ++i;
  }
  return out;
}

SplitGraph split_non_unique_edges(const Graph& g) {
  std::vector<Arc> doubled = g.arcs();
  for (Arc& a : doubled) {
    if (a.weight > std::numeric_limits<Weight>::max() / 2) {
      throw OverflowError("weight too large to double");
    }
    a.weight *= 2;
  }
  Graph scaled = Graph::from_arcs(g.node_count(), doubled);
  ShortestPathEngine engine(scaled);

  std::vector<Arc> arcs;
  std::vector<EdgeRef> split_edges;
  for (const Arc& a : doubled) {
    if (engine.is_unique_between(a.tail, a.head, Cost(static_cast<std::uint64_t>(a.weight)))) {
      arcs.push_back(a);
      continue;
    }
    NodeId mid = g.node_count() + static_cast<NodeId>(split_edges.size());
    arcs.push_back({a.tail, mid, a.weight / 2});
    arcs.push_back({mid, a.head, a.weight / 2});
    split_edges.push_back({a.tail, a.head});
  }
  NodeId total = g.node_count() + static_cast<NodeId>(split_edges.size());
  return {Graph::from_arcs(total, arcs), SplitMapping(g.node_count(), std::move(split_edges))};
}

std::string split_marker_comment(NodeId original_node_count) {
  return std::string(kSplitMarker) + std::to_string(original_node_count);
}

std::optional<NodeId> parse_split_marker(const std::vector<std::string>& comments) {
  for (const std::string& c : comments) {
    if (c.rfind(kSplitMarker, 0) == 0) {
      try {
        unsigned long v = std::stoul(c.substr(kSplitMarker.size()));
        if (v >= kInvalidNode) throw FormatError("split marker out of range");
        return static_cast<NodeId>(v);
      } catch (const std::logic_error&) {
        throw FormatError("malformed split marker '" + c + "'");
      }
    }
  }
  return std::nullopt;
}

}  // namespace routezip
