#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "routezip/codec.hpp"
#include "routezip/hierarchy.hpp"
#include "routezip/shortest_path.hpp"
#include "routezip/via.hpp"

namespace routezip {

enum class CompressMethod { kViaLinear, kViaBinary, kViaGallop, kViaNodes, kCh, kCombined };

inline constexpr CompressMethod kAllMethods[] = {
    CompressMethod::kViaLinear, CompressMethod::kViaBinary, CompressMethod::kViaGallop,
    CompressMethod::kViaNodes,  CompressMethod::kCh,        CompressMethod::kCombined};

std::optional<CompressMethod> parse_method(std::string_view name);
const char* to_string(CompressMethod m);
Method wire_method(CompressMethod m);

/// Route compression end to end: from a path in the original graph to a
/// RouteMessage and back. Each method needs its own inputs: via-edge methods
/// the graph, via nodes the split graph, CH and combined the hierarchy and
/// the graph. Missing inputs raise MissingInputError.
///
/// The map version stamped on a message fingerprints the data the receiver
/// must hold; decompress rejects a mismatch with IntegrityError.
class RoutePipeline {
 public:
  RoutePipeline(const Graph* graph, const Hierarchy* hierarchy, const SplitGraph* split);

  RouteMessage compress(CompressMethod method, const Path& p);
  Path decompress(const RouteMessage& m);

  std::uint64_t map_version(Method m) const;

  /// Uniqueness and shortest-path queries issued since the last reset.
  std::size_t queries() const;
  void reset_queries();

 private:
  ShortestPathEngine& graph_engine();
  ShortestPathEngine& split_engine();
  const Hierarchy& hierarchy() const;
  void check_version(const RouteMessage& m) const;

  const Graph* graph_;
  const Hierarchy* hierarchy_;
  const SplitGraph* split_;
  std::unique_ptr<ShortestPathEngine> graph_engine_;
  std::unique_ptr<ShortestPathEngine> split_engine_;
};

}  // namespace routezip
