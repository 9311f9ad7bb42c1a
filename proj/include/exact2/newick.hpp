#pragma once

#include <string>
#include <string_view>

#include "exact2/tree.hpp"

namespace exact2 {

// Newick with mandatory integer weights, e.g. ((a:2,b:0)p:2,(c:0,d:2)q:0)r;
//
// The weight after ':' belongs to the edge towards the enclosing node; the
// outermost node (the anchor) carries no weight. Childless nodes are leaves
// and must be named. In the unrooted reading a named anchor with a single
// child is a leaf as well, so `(b:2)a;` is the two-leaf tree.

/// Unrooted reading: the anchor is an arbitrary vertex. Throws ParseError.
LabeledTree parse_tree(std::string_view text);

/// Rooted reading: the anchor is the root. Throws ParseError.
RootedLabeledTree parse_rooted_tree(std::string_view text);

struct NewickOptions {
  bool interior_names = true;
};

/// Deterministic text: children are ordered by the smallest leaf name they
/// contain. An unrooted tree is anchored at the interior neighbour of its
/// smallest leaf (or at that leaf when no interior vertex exists).
std::string to_newick(const LabeledTree& t, NewickOptions options = {});
std::string to_newick(const RootedLabeledTree& t, NewickOptions options = {});

/// Serialization that identifies a tree up to relabeling of interior
/// vertices; used for deduplication.
inline std::string tree_key(const LabeledTree& t) { return to_newick(t, {.interior_names = false}); }
inline std::string tree_key(const RootedLabeledTree& t) {
  return to_newick(t, {.interior_names = false});
}

/// Graphviz description; 0-edges are dashed, other edges carry their weight.
std::string to_dot(const LabeledTree& t);
std::string to_dot(const RootedLabeledTree& t);

}  // namespace exact2
