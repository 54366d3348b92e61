#include "routezip/dimacs.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "routezip/error.hpp"

namespace routezip {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

NodeId to_node(std::int64_t one_based, std::int64_t node_count, std::size_t line_no) {
  if (one_based < 1 || one_based > node_count) {
    throw RangeError("line " + std::to_string(line_no) + ": node " + std::to_string(one_based) +
                     " outside [1," + std::to_string(node_count) + "]");
  }
  return static_cast<NodeId>(one_based - 1);
}

}  // namespace

Graph load_dimacs(std::istream& in, std::vector<std::string>* comments) {
  std::optional<std::int64_t> node_count;
  std::int64_t declared_arcs = 0;
  std::vector<Arc> arcs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") {
      if (comments) {
        auto pos = line.find('c');
        std::string body = line.substr(pos + 1);
        if (!body.empty() && body.front() == ' ') body.erase(0, 1);
        comments->push_back(body);
      }
      continue;
    }
    if (tokens[0] == "p") {
      if (node_count) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw ParseError(line_no, "expected 'p sp <nodes> <arcs>'");
      }
      std::int64_t n = parse_int(tokens[2], line_no);
      declared_arcs = parse_int(tokens[3], line_no);
      if (n < 0 || n >= kInvalidNode || declared_arcs < 0) {
        throw ParseError(line_no, "invalid problem dimensions");
      }
      node_count = n;
      continue;
    }
    if (tokens[0] == "a") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'a <tail> <head> <weight>'");
      std::int64_t tail = parse_int(tokens[1], line_no);
      std::int64_t head = parse_int(tokens[2], line_no);
      std::int64_t weight = parse_int(tokens[3], line_no);
      if (weight <= 0) {
        throw DomainError("line " + std::to_string(line_no) + ": non-positive weight " +
                          std::to_string(weight));
      }
      if (!node_count) throw ParseError(line_no, "arc before problem line");
      arcs.push_back({to_node(tail, *node_count, line_no), to_node(head, *node_count, line_no), weight});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (!node_count) throw ParseError(line_no, "missing problem line");
  if (static_cast<std::int64_t>(arcs.size()) != declared_arcs) {
    throw ParseError(line_no, "problem line declares " + std::to_string(declared_arcs) +
                                  " arcs but file has " + std::to_string(arcs.size()));
  }
  try {
    return Graph::from_arcs(static_cast<NodeId>(*node_count), arcs);
  } catch (const DomainError& e) {
    // self-loops are only detected once all arcs are known
    throw DomainError(std::string("dimacs: ") + e.what());
  }
}

void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const std::string& c : comments) {
    out << "c " << c << '\n';
  }
  out << "p sp " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Arc& a : g.arcs()) {
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
  }
}

Path load_path(std::istream& in) {
  std::optional<std::int64_t> declared;
  Path p;
  std::string line;
  std::size_t line_no = 0;
  auto node = [&](std::string_view token) {
    std::int64_t v = parse_int(token, line_no);
    if (v < 1 || v >= kInvalidNode) {
      throw RangeError("line " + std::to_string(line_no) + ": node id " + std::to_string(v) +
                       " out of range");
    }
    return static_cast<NodeId>(v - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "q") {
      if (declared) throw ParseError(line_no, "duplicate 'q' line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'q <count>'");
      declared = parse_int(tokens[1], line_no);
      if (*declared < 0) throw ParseError(line_no, "negative edge count");
      continue;
    }
    if (tokens[0] == "e") {
      if (!declared) throw ParseError(line_no, "edge before 'q' line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <tail> <head>'");
      p.push_back({node(tokens[1]), node(tokens[2])});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (!declared) throw ParseError(line_no, "missing 'q' line");
  if (static_cast<std::int64_t>(p.size()) != *declared) {
    throw ParseError(line_no, "declared " + std::to_string(*declared) + " edges, found " +
                                  std::to_string(p.size()));
  }
  return p;
}

void write_path(std::ostream& out, const Path& p) {
  out << "q " << p.size() << '\n';
  for (const EdgeRef& e : p) {
    out << "e " << e.tail + 1 << ' ' << e.head + 1 << '\n';
  }
}

}  // namespace routezip
