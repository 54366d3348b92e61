#include <array>
#include <istream>
#include <iterator>
#include <ostream>

#include "routezip/error.hpp"
#include "routezip/hierarchy.hpp"

namespace routezip {

namespace {

constexpr std::array<char, 4> kMagic{'C', 'H', 'R', '1'};

enum EdgeFlags : std::uint8_t {
  kShortcut = 1u << 0,
  kUp = 1u << 1,
  kDown = 1u << 2,
};

template <class T>
void put(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xffu));
  }
}

class Reader {
 public:
  explicit Reader(std::vector<char> bytes) : bytes_(std::move(bytes)) {}

  template <class T>
  T get() {
    if (bytes_.size() - pos_ < sizeof(T)) throw LengthError("hierarchy file is truncated");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      value |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(value);
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::vector<char> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_hierarchy(std::ostream& out, const Hierarchy& h) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, h.node_count());
  for (NodeId v : h.order()) put<std::uint32_t>(out, v);
  auto edges = h.edges();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(edges.size()));
  std::uint32_t shortcuts = 0;
  for (const ChEdge& e : edges) {
    std::uint8_t flags = h.level(e.head) > h.level(e.tail) ? kUp : kDown;
    if (e.shortcut) {
      flags |= kShortcut;
      ++shortcuts;
    }
    put<std::uint32_t>(out, e.tail);
    put<std::uint32_t>(out, e.head);
    put<std::uint64_t>(out, e.weight);
    put<std::uint8_t>(out, flags);
  }
  // middle-node table, one record per shortcut in edge order
  put<std::uint32_t>(out, shortcuts);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ChEdge& e = edges[i];
    if (!e.shortcut) continue;
    put<std::uint32_t>(out, static_cast<std::uint32_t>(i));
    put<std::uint32_t>(out, e.middle);
    put<std::uint8_t>(out, static_cast<std::uint8_t>((e.first_shortcut ? 1u : 0u) |
                                                     (e.second_shortcut ? 2u : 0u)));
  }
}

Hierarchy load_hierarchy(std::istream& in) {
  Reader r(std::vector<char>(std::istreambuf_iterator<char>(in), {}));
  std::array<char, 4> magic{};
  for (char& c : magic) c = static_cast<char>(r.get<std::uint8_t>());
  if (magic != kMagic) throw FormatError("not a hierarchy file (bad magic)");

  auto n = r.get<std::uint32_t>();
  if (n == kInvalidNode || r.remaining() / 4 < n) throw LengthError("hierarchy file is truncated");
  std::vector<NodeId> order(n);
  for (NodeId& v : order) v = r.get<std::uint32_t>();

  auto m = r.get<std::uint32_t>();
  if (r.remaining() / 17 < m) throw LengthError("hierarchy file is truncated");
  std::vector<ChEdge> edges(m);
  std::vector<std::uint8_t> flags(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    edges[i].tail = r.get<std::uint32_t>();
    edges[i].head = r.get<std::uint32_t>();
    edges[i].weight = r.get<std::uint64_t>();
    flags[i] = r.get<std::uint8_t>();
    if ((flags[i] & ~(kShortcut | kUp | kDown)) != 0 || ((flags[i] & kUp) != 0) == ((flags[i] & kDown) != 0)) {
      throw FormatError("edge " + std::to_string(i) + " has invalid flags");
    }
    edges[i].shortcut = (flags[i] & kShortcut) != 0;
  }

  auto shortcuts = r.get<std::uint32_t>();
  std::uint32_t expected = 0;
  for (const ChEdge& e : edges) expected += e.shortcut;
  if (shortcuts != expected) throw FormatError("middle-node table does not match shortcut count");
  std::uint32_t last = 0;
  for (std::uint32_t k = 0; k < shortcuts; ++k) {
    auto idx = r.get<std::uint32_t>();
    if (idx >= m || !edges[idx].shortcut || (k > 0 && idx <= last)) {
      throw FormatError("middle-node table entry " + std::to_string(k) + " is invalid");
    }
    last = idx;
    edges[idx].middle = r.get<std::uint32_t>();
    auto kinds = r.get<std::uint8_t>();
    if (kinds > 3) throw FormatError("invalid constituent kinds");
    edges[idx].first_shortcut = (kinds & 1u) != 0;
    edges[idx].second_shortcut = (kinds & 2u) != 0;
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after hierarchy");

  for (std::uint32_t i = 0; i < m; ++i) {
    if (edges[i].tail >= n || edges[i].head >= n) throw FormatError("edge endpoint out of range");
  }
  Hierarchy h(n, std::move(order), std::move(edges));
  auto stored = h.edges();
  for (std::uint32_t i = 0; i < m; ++i) {
    bool up = h.level(stored[i].head) > h.level(stored[i].tail);
    if (up != ((flags[i] & kUp) != 0)) throw FormatError("edge direction flag contradicts levels");
  }
  return h;
}

}  // namespace routezip
