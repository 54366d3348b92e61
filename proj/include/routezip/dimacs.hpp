#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "routezip/graph.hpp"

namespace routezip {

/// Reads a 9th DIMACS challenge ".gr" file ("c" comments, one "p sp N M"
/// line, "a TAIL HEAD WEIGHT" arcs with 1-based ids). Comment bodies are
/// appended to `comments` when given.
///
/// Throws ParseError (with line number) on malformed lines, DomainError on
/// non-positive weights, RangeError on ids outside [1, N].
Graph load_dimacs(std::istream& in, std::vector<std::string>* comments = nullptr);

/// Writes the canonical form: comments, problem line, arcs ordered by
/// (tail, head). load_dimacs(write_dimacs(g)) == g.
void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});

/// Reads a ".path" file: "q K" followed by K lines "e TAIL HEAD" (1-based).
Path load_path(std::istream& in);

void write_path(std::ostream& out, const Path& p);

}  // namespace routezip
