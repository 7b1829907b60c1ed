#ifndef PMC_GRAPH_IO_HPP
#define PMC_GRAPH_IO_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmc/graph.hpp"

namespace pmc {

enum class GraphFormat { kEdgeList, kDimacs, kAuto };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct TextLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> tokenize(std::string_view text, char comment) {
  std::vector<TextLine> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == comment) continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  if (pos != tok.size() || tok.front() == '-') {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<std::size_t>(value);
}

inline Graph build(std::size_t n, const std::vector<std::pair<Edge, std::size_t>>& edges) {
  if (n == 0) throw ParseError(0, "graph has no vertices");
  if (n > VertexSet::kMaxVertices) {
    throw ParseError(0, "graph has " + std::to_string(n) + " vertices; at most " +
                            std::to_string(VertexSet::kMaxVertices) + " are supported");
  }
  std::vector<Edge> plain;
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (const auto& [e, line] : edges) {
    const auto [u, v] = e;
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(line, "vertex outside [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    if (adj[u - 1].contains(v - 1)) {
      throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj[u - 1].insert(v - 1);
    adj[v - 1].insert(u - 1);
    plain.emplace_back(u - 1, v - 1);
  }
  return Graph(n, plain);
}

inline Graph parse_edge_list(std::string_view text, std::optional<std::size_t> declared_n) {
  auto lines = tokenize(text, '#');
  for (const auto& l : lines) {
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected two vertex ids");
  }
  std::size_t start = 0;
  std::optional<std::size_t> header_n;
  // A leading "n m" line counts as a header only when exactly m edge lines
  // follow and every later id fits in [1,n]; otherwise it is an edge.
  if (!lines.empty()) {
    const std::size_t a = parse_count(lines[0].tokens[0], lines[0].number);
    const std::size_t b = parse_count(lines[0].tokens[1], lines[0].number);
    bool fits = b == lines.size() - 1;
    for (std::size_t i = 1; fits && i < lines.size(); ++i) {
      for (const auto& tok : lines[i].tokens) {
        const std::size_t id = parse_count(tok, lines[i].number);
        if (id == 0 || id > a) fits = false;
      }
    }
    if (fits) {
      header_n = a;
      start = 1;
    }
  }
  std::vector<std::pair<Edge, std::size_t>> edges;
  std::size_t max_id = 0;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::size_t u = parse_count(l.tokens[0], l.number);
    const std::size_t v = parse_count(l.tokens[1], l.number);
    max_id = std::max({max_id, u, v});
    edges.push_back({{u, v}, l.number});
  }
  std::size_t n = max_id;
  if (header_n) n = *header_n;
  if (declared_n) {
    if (header_n && *header_n != *declared_n) {
      throw ParseError(lines[0].number, "header vertex count disagrees with the declared count");
    }
    n = *declared_n;
  }
  if (n == 0) throw ParseError(lines.empty() ? 0 : lines[0].number, "graph has no vertices");
  return build(n, edges);
}

inline Graph parse_dimacs(std::string_view text) {
  auto lines = tokenize(text, 'c');
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t p_line = 0;
  std::vector<std::pair<Edge, std::size_t>> edges;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "p") {
      if (n) throw ParseError(l.number, "second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        throw ParseError(l.number, "expected 'p edge n m'");
      }
      n = parse_count(t[2], l.number);
      declared_m = parse_count(t[3], l.number);
      p_line = l.number;
    } else if (t[0] == "e") {
      if (!n) throw ParseError(l.number, "edge before problem line");
      if (t.size() != 3) throw ParseError(l.number, "expected 'e u v'");
      edges.push_back({{parse_count(t[1], l.number), parse_count(t[2], l.number)}, l.number});
    } else {
      throw ParseError(l.number, "unknown line type '" + t[0] + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'p edge n m' line");
  if (edges.size() != declared_m) {
    throw ParseError(p_line, "problem line declares " + std::to_string(declared_m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return build(*n, edges);
}

inline bool looks_like_dimacs(std::string_view text) {
  for (const auto& l : tokenize(text, '#'))
    if (l.tokens[0] == "p" || l.tokens[0] == "e" || l.tokens[0] == "c") return true;
  return false;
}

}  // namespace detail

/// Parses an edge list ("u v" per line, 1-based, optional "n m" header) or a
/// DIMACS graph ("p edge n m", "e u v"). The ordering of the result is the identity.
inline Graph load_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto,
                        std::optional<std::size_t> declared_n = std::nullopt) {
  if (format == GraphFormat::kAuto) {
    format = detail::looks_like_dimacs(text) ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
  }
  if (format == GraphFormat::kDimacs) {
    Graph g = detail::parse_dimacs(text);
    if (declared_n && *declared_n != g.order()) {
      throw ParseError(0, "problem line vertex count disagrees with the declared count");
    }
    return g;
  }
  return detail::parse_edge_list(text, declared_n);
}

/// Edge list with an "n m" header, vertices 1-based.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace pmc

#endif  // PMC_GRAPH_IO_HPP
