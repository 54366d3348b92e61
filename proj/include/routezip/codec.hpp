#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "routezip/graph.hpp"
#include "routezip/hierarchy.hpp"

namespace routezip {

enum class Method : std::uint8_t {
  kViaEdges = 0,
  kViaNodes = 1,
  kChPath = 2,
  kCombined = 3,
};

const char* to_string(Method m);

/// A compressed route as sent to the vehicle. VIA_NODES carries `nodes`;
/// every other method carries `arcs`, and only CH_PATH and COMBINED may
/// flag arcs as shortcuts.
struct RouteMessage {
  std::uint64_t map_version = 0;
  Method method = Method::kViaEdges;
  NodeId source = 0;
  NodeId target = 0;
  std::vector<ChArc> arcs;
  std::vector<NodeId> nodes;

  friend bool operator==(const RouteMessage&, const RouteMessage&) = default;
};

// Layout:
//   "RTC1" | map_version u64 LE | method u8 | source, target (LEB128)
//   VIA_EDGES:         count k, then per arc tail and head as zigzag LEB128
//                      deltas against the previous arc's head (source first)
//   VIA_NODES:         count, then zigzag LEB128 deltas against the
//                      previous node (source first)
//   CH_PATH, COMBINED: as VIA_EDGES, then ceil(k/8) bytes of shortcut bits,
//                      LSB first, zero padded

/// Throws FormatError if the body does not fit the method.
std::vector<std::uint8_t> encode(const RouteMessage& m);

/// Accepts exactly the byte strings encode produces. Throws FormatError on
/// bad magic, overlong or overflowing varints, ids beyond 32 bits, non-zero
/// padding or trailing bytes; LengthError on truncation; VersionError on an
/// unknown method tag.
RouteMessage decode(std::span<const std::uint8_t> bytes);

namespace varint {

void put_uleb(std::vector<std::uint8_t>& out, std::uint64_t value);
/// Reads one canonical LEB128 value at `pos`, advancing it.
std::uint64_t get_uleb(std::span<const std::uint8_t> in, std::size_t& pos);

constexpr std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}
constexpr std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

}  // namespace varint

}  // namespace routezip
