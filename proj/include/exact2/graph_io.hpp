#pragma once

#include <string>
#include <string_view>

#include "exact2/graph.hpp"

namespace exact2 {

// Text format:
//   n m          first content line
//   u v          m lines, 0-based ids (an arc u->v for oriented graphs)
// '#' starts a comment, blank lines are ignored. Errors throw ParseError.

Graph parse_graph(std::string_view text);
OrientedGraph parse_oriented_graph(std::string_view text);

/// Edges sorted lexicographically, one per line.
std::string format_graph(const Graph& g);
std::string format_oriented_graph(const OrientedGraph& d);

std::string to_dot(const Graph& g);
std::string to_dot(const OrientedGraph& d);

}  // namespace exact2
