#pragma once

// Maximal-unique-prefix searches over a path of n edges, 1-based edge
// indices. `unique(first, last)` answers whether edges first..last
// (inclusive, first <= last) form a unique shortest path. The predicate must
// be prefix-closed: a contiguous part of a unique shortest path is itself one.
// An empty range is unique without asking.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace routezip {

enum class PrefixSearch { kLinear, kBinary, kGallop };

/// Largest q in [first-1, last] such that edges first..q are unique.
/// Bracket (lo, hi) keeps lo known-unique and hi known-failing (or past the
/// end), so the full range can be returned.
template <class UniqueFn>
std::size_t max_unique_prefix_binary(UniqueFn&& unique, std::size_t first, std::size_t last) {
  std::size_t lo = first - 1;
  std::size_t hi = last + 1;
  while (lo + 1 != hi) {
    std::size_t mid = (lo + hi) / 2;
    if (unique(first, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Same contract as max_unique_prefix_binary. Probes prefixes of 1, 2, 4, ...
/// edges (the last probe clamped to `last`) until one fails, then binary
/// searches between the last success and the failure.
template <class UniqueFn>
std::size_t max_unique_prefix_gallop(UniqueFn&& unique, std::size_t first, std::size_t last) {
  std::size_t lo = first - 1;
  std::size_t hi = last + 1;
  for (std::size_t h = 1;; h *= 2) {
    std::size_t end = std::min(first + h - 1, last);
    if (!unique(first, end)) {
      hi = end;
      break;
    }
    lo = end;
    if (end == last) return last;
  }
  while (lo + 1 != hi) {
    std::size_t mid = (lo + hi) / 2;
    if (unique(first, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// 1-based positions of the via edges chosen by the greedy left-to-right
/// scan: extend the current segment while it stays unique, otherwise keep
/// the breaking edge and restart right after it. Issues exactly n queries.
template <class UniqueFn>
std::vector<std::size_t> via_positions_linear(UniqueFn&& unique, std::size_t n) {
  std::vector<std::size_t> vias;
  std::size_t start = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    if (unique(start, j)) continue;
    vias.push_back(j);
    start = j + 1;
  }
  return vias;
}

/// Same result as via_positions_linear, finding each segment end with a
/// prefix search.
template <class UniqueFn>
std::vector<std::size_t> via_positions(UniqueFn&& unique, std::size_t n, PrefixSearch search) {
  if (search == PrefixSearch::kLinear) {
    return via_positions_linear(unique, n);
  }
  std::vector<std::size_t> vias;
  std::size_t start = 1;
  while (start <= n) {
    std::size_t p = search == PrefixSearch::kBinary ? max_unique_prefix_binary(unique, start, n)
                                                     : max_unique_prefix_gallop(unique, start, n);
    if (p < n) vias.push_back(p + 1);
    start = p + 2;
  }
  return vias;
}

/// 1-based node positions (in u_1..u_{n+1}) of the interior anchors that
/// split the path into maximal unique segments. Returns false if some single
/// edge is not unique, in which case no anchor sequence exists.
template <class UniqueFn>
bool anchor_positions(UniqueFn&& unique, std::size_t n, std::vector<std::size_t>& anchors) {
  anchors.clear();
  std::size_t start = 1;
  while (start <= n) {
    std::size_t p = max_unique_prefix_gallop(unique, start, n);
    if (p < start) return false;
    if (p == n) break;
    anchors.push_back(p + 1);
    start = p + 1;
  }
  return true;
}

}  // namespace routezip
