#pragma once

#include <optional>
#include <vector>

#include "exact2/graph.hpp"
#include "exact2/tree.hpp"

namespace exact2 {

/// Arc x -> y iff the path from x up to lca(x, y) has weight 0 and the path
/// from lca(x, y) down to y has weight k. Vertices are the leaves ordered by
/// name_less and named after them. Requires k >= 1.
OrientedGraph directed_explain(const RootedLabeledTree& t, Weight k);

/// Forgets the root.
LabeledTree underlying_tree(const RootedLabeledTree& t);

/// Root of degree >= 2, every other interior vertex of degree >= 3 and no 0-edge
/// between two interior vertices (the root counts as interior). A lone leaf
/// is canonical.
bool is_canonical(const RootedLabeledTree& t);

/// Labeling used when the root is placed on a leaf edge v-w.
enum class LeafRooting {
  /// 0 on the leaf side, the old weight above: v -0- root -λ- w.
  zero_at_leaf,
  /// v -λ- root -0- w. Produces an interior 0-edge, so the result is not
  /// canonical; kept for comparison.
  weight_at_leaf,
};

/// All canonical rootings of a canonical unrooted tree with at least two
/// vertices: at every interior vertex, on the edge of every leaf whose edge
/// is positive or leads to another leaf, and at every interior point of
/// edges of weight m > 1 (splits j, m-j). Duplicates are removed; the result
/// is sorted by tree_key. Throws std::invalid_argument for other inputs.
std::vector<RootedLabeledTree> enumerate_rooted(const LabeledTree& t,
                                                LeafRooting leaf_rooting = LeafRooting::zero_at_leaf);

enum class OrientedObstruction { none, cycle, in_star };

struct OrientedRecognitionOutcome {
  bool explainable = false;
  std::optional<RootedLabeledTree> witness;
  OrientedObstruction obstruction = OrientedObstruction::none;
  /// Representatives (ids in the input) of the twin classes forming the
  /// obstruction: the vertices of a cycle in traversal order, or x, z, y of
  /// an induced x -> z <- y.
  std::vector<Vertex> certificate;
};

/// Decides whether `d` is the directed exactly-2 relation of a rooted tree:
/// the quotient by directed false twins must be an oriented forest in which
/// no vertex has two in-neighbours.
OrientedRecognitionOutcome recognize_oriented(const OrientedGraph& d);

/// Rooted canonical tree with directed_explain(result, 2) == d. Throws
/// std::invalid_argument when `d` is not explainable.
RootedLabeledTree construct_oriented(const OrientedGraph& d);

/// True iff `t` explains `d` at k, matching leaves to vertices by name.
/// Throws std::invalid_argument when the name sets differ.
bool verify_oriented(const RootedLabeledTree& t, const OrientedGraph& d, Weight k);

}  // namespace exact2
