#include "routezip/codec.hpp"

#include <array>

#include "routezip/error.hpp"

namespace routezip {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'R', 'T', 'C', '1'};

bool carries_arcs(Method m) { return m != Method::kViaNodes; }
bool allows_shortcuts(Method m) { return m == Method::kChPath || m == Method::kCombined; }

void put_delta(std::vector<std::uint8_t>& out, NodeId value, NodeId reference) {
  varint::put_uleb(out, varint::zigzag(static_cast<std::int64_t>(value) - static_cast<std::int64_t>(reference)));
}

NodeId get_node(std::span<const std::uint8_t> in, std::size_t& pos) {
  std::uint64_t v = varint::get_uleb(in, pos);
  if (v >= kInvalidNode) throw FormatError("node id out of range");
  return static_cast<NodeId>(v);
}

NodeId get_delta(std::span<const std::uint8_t> in, std::size_t& pos, NodeId reference) {
  std::int64_t delta = varint::unzigzag(varint::get_uleb(in, pos));
  // |delta| below 2^63 after unzigzag; reference below 2^32, so no overflow
  if (delta > static_cast<std::int64_t>(kInvalidNode) || delta < -static_cast<std::int64_t>(kInvalidNode)) {
    throw FormatError("node delta out of range");
  }
  std::int64_t value = static_cast<std::int64_t>(reference) + delta;
  if (value < 0 || value >= static_cast<std::int64_t>(kInvalidNode)) {
    throw FormatError("node id out of range");
  }
  return static_cast<NodeId>(value);
}

std::size_t get_count(std::span<const std::uint8_t> in, std::size_t& pos, std::size_t min_bytes_each) {
  std::uint64_t count = varint::get_uleb(in, pos);
  if (count > (in.size() - pos) / min_bytes_each) {
    throw LengthError("declared count exceeds the remaining bytes");
  }
  return static_cast<std::size_t>(count);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::kViaEdges: return "VIA_EDGES";
    case Method::kViaNodes: return "VIA_NODES";
    case Method::kChPath: return "CH_PATH";
    case Method::kCombined: return "COMBINED";
  }
  return "UNKNOWN";
}

namespace varint {

void put_uleb(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t get_uleb(std::span<const std::uint8_t> in, std::size_t& pos) {
  std::uint64_t value = 0;
  for (unsigned shift = 0;; shift += 7) {
    if (pos >= in.size()) throw LengthError("truncated varint");
    std::uint8_t byte = in[pos++];
    if (shift == 63 && byte > 1) throw FormatError("varint overflows 64 bits");
    value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) {
      if (byte == 0 && shift > 0) throw FormatError("overlong varint");
      return value;
    }
    if (shift == 63) throw FormatError("varint overflows 64 bits");
  }
}

}  // namespace varint

std::vector<std::uint8_t> encode(const RouteMessage& m) {
  if (static_cast<std::uint8_t>(m.method) > 3) throw VersionError("unknown method");
  if (carries_arcs(m.method) ? !m.nodes.empty() : !m.arcs.empty()) {
    throw FormatError(std::string("body does not match method ") + to_string(m.method));
  }
  if (!allows_shortcuts(m.method)) {
    for (const ChArc& a : m.arcs) {
      if (a.shortcut) throw FormatError("VIA_EDGES cannot carry shortcuts");
    }
  }
  if (m.source == kInvalidNode || m.target == kInvalidNode) throw FormatError("invalid endpoint");

  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(m.map_version >> (8 * i)));
  out.push_back(static_cast<std::uint8_t>(m.method));
  varint::put_uleb(out, m.source);
  varint::put_uleb(out, m.target);

  if (m.method == Method::kViaNodes) {
    varint::put_uleb(out, m.nodes.size());
    NodeId reference = m.source;
    for (NodeId v : m.nodes) {
      if (v == kInvalidNode) throw FormatError("invalid node id");
      put_delta(out, v, reference);
      reference = v;
    }
    return out;
  }

  varint::put_uleb(out, m.arcs.size());
  NodeId reference = m.source;
  for (const ChArc& a : m.arcs) {
    if (a.tail == kInvalidNode || a.head == kInvalidNode) throw FormatError("invalid node id");
    put_delta(out, a.tail, reference);
    put_delta(out, a.head, reference);
    reference = a.head;
  }
  if (allows_shortcuts(m.method)) {
    std::size_t first = out.size();
    out.resize(first + (m.arcs.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
      if (m.arcs[i].shortcut) out[first + i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
  }
  return out;
}

RouteMessage decode(std::span<const std::uint8_t> bytes) {
  constexpr std::size_t kFixedHeader = kMagic.size() + 8 + 1;
  if (bytes.size() < kMagic.size()) throw LengthError("message shorter than its magic");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw FormatError("bad magic");
  if (bytes.size() < kFixedHeader) throw LengthError("truncated header");

  RouteMessage m;
  for (int i = 0; i < 8; ++i) {
    m.map_version |= static_cast<std::uint64_t>(bytes[kMagic.size() + i]) << (8 * i);
  }
  std::uint8_t tag = bytes[kFixedHeader - 1];
  if (tag > 3) throw VersionError("unknown method tag " + std::to_string(tag));
  m.method = static_cast<Method>(tag);

  std::size_t pos = kFixedHeader;
  m.source = get_node(bytes, pos);
  m.target = get_node(bytes, pos);

  if (m.method == Method::kViaNodes) {
    std::size_t count = get_count(bytes, pos, 1);
    m.nodes.reserve(count);
    NodeId reference = m.source;
    for (std::size_t i = 0; i < count; ++i) {
      reference = get_delta(bytes, pos, reference);
      m.nodes.push_back(reference);
    }
  } else {
    std::size_t count = get_count(bytes, pos, 2);
    m.arcs.reserve(count);
    NodeId reference = m.source;
    for (std::size_t i = 0; i < count; ++i) {
      ChArc a;
      a.tail = get_delta(bytes, pos, reference);
      a.head = get_delta(bytes, pos, reference);
      reference = a.head;
      m.arcs.push_back(a);
    }
    if (allows_shortcuts(m.method)) {
      std::size_t bitmap = (count + 7) / 8;
      if (bytes.size() - pos < bitmap) throw LengthError("truncated shortcut bitmap");
      for (std::size_t i = 0; i < count; ++i) {
        m.arcs[i].shortcut = ((bytes[pos + i / 8] >> (i % 8)) & 1u) != 0;
      }
      if (count % 8 != 0 && (bytes[pos + bitmap - 1] >> (count % 8)) != 0) {
        throw FormatError("non-zero bitmap padding");
      }
      pos += bitmap;
    }
  }
  if (pos != bytes.size()) throw FormatError("trailing bytes after message");
  return m;
}

}  // namespace routezip
