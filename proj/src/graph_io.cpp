#include "exact2/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "exact2/error.hpp"

namespace exact2 {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Splits each content line into whitespace-separated tokens, dropping
// comments and blank lines.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start)
        tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int to_int(const Token& t, const char* what) {
  int value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0)
    throw ParseError(std::string("expected non-negative integer ") + what + ", got '" +
                         std::string(t.text) + "'",
                     t.line, t.column);
  return value;
}

struct PairList {
  int n = 0;
  std::vector<VertexPair> pairs;
  std::vector<Token> starts;  // first token of each pair's line
};

PairList parse_pairs(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing header line 'n m'", 1, 1);
  const auto& header = lines.front();
  if (header.size() != 2)
    throw ParseError("header must be 'n m'", header.front().line, header.front().column);
  PairList out;
  out.n = to_int(header[0], "vertex count");
  const int m = to_int(header[1], "edge count");
  if (static_cast<int>(lines.size()) - 1 != m) {
    const auto& last = lines.back().front();
    throw ParseError("header announces " + std::to_string(m) + " pairs, found " +
                         std::to_string(lines.size() - 1),
                     last.line, last.column);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.size() != 2) throw ParseError("expected 'u v'", line.front().line, line.front().column);
    const int u = to_int(line[0], "vertex id");
    const int v = to_int(line[1], "vertex id");
    if (u >= out.n || v >= out.n || u == v)
      throw ParseError(u == v ? "self-loop" : "vertex id out of range", line.front().line,
                       line.front().column);
    out.pairs.emplace_back(u, v);
    out.starts.push_back(line.front());
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto parsed = parse_pairs(text);
  return Graph::from_edge_list(parsed.n, parsed.pairs);
}

OrientedGraph parse_oriented_graph(std::string_view text) {
  const auto parsed = parse_pairs(text);
  std::set<VertexPair> seen;
  for (std::size_t i = 0; i < parsed.pairs.size(); ++i) {
    const auto [u, v] = parsed.pairs[i];
    if (seen.count({v, u}))
      throw ParseError("arcs in both directions between " + std::to_string(u) + " and " + std::to_string(v),
                       parsed.starts[i].line, parsed.starts[i].column);
    seen.emplace(u, v);
  }
  return OrientedGraph::from_arc_list(parsed.n, parsed.pairs);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_oriented_graph(const OrientedGraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const OrientedGraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < d.order(); ++v) out << "  " << v << " [label=\"" << d.name(v) << "\"];\n";
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace exact2
