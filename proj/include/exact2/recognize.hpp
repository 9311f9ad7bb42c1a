#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exact2/graph.hpp"
#include "exact2/tree.hpp"

namespace exact2 {

struct RecognitionOutcome {
  bool explainable = false;
  /// Canonical tree explaining the input at k = 2 (present iff explainable).
  std::optional<LabeledTree> witness;
  /// When not explainable: vertex set of a block of the false-twin quotient
  /// that is not a clique, given by the class representatives' ids in the
  /// input graph.
  std::vector<Vertex> certificate;
};

/// Tree for a connected block graph on at least two vertices: bridges keep
/// weight 2, larger cliques become stars of 1-edges, and every cut vertex is
/// represented by a pendant leaf on a 0-edge. Leaves carry the vertex names.
/// The result is canonical and has no two leaves at distance 0.
/// Throws std::invalid_argument for other inputs.
LabeledTree construct_block_tree(const Graph& g);

/// Expands each representative leaf of `quotient_tree` into its whole
/// false-twin class. A class whose leaf edge weighs exactly k/2 is hung below
/// a new vertex on 0-edges; otherwise its members become siblings with the
/// leaf edge's weight. `names` maps vertex ids of the original graph to leaf
/// names. Every representative leaf must have an interior neighbour.
LabeledTree blow_up(const LabeledTree& quotient_tree, const TwinPartition& p,
                    std::span<const std::string> names, Weight k);

/// Joins trees explaining the components of a graph into one tree: each tree
/// contributes an interior anchor (two-leaf trees are split at a new midpoint,
/// single leaves get a hub on a 0-edge) and consecutive anchors are linked by
/// (k+1)-edges. A single tree is returned unchanged.
LabeledTree join_components(std::span<const LabeledTree> trees, Weight k);

/// Decides whether `g` is the exactly-2 relation of some edge-weighted tree
/// and builds a witness. Only k = 2 is supported; other values throw
/// std::invalid_argument.
RecognitionOutcome recognize(const Graph& g, Weight k = 2);

/// True iff `t` explains `g` at k, matching leaves to vertices by name.
/// Throws std::invalid_argument listing the names present on only one side.
bool verify(const LabeledTree& t, const Graph& g, Weight k);

}  // namespace exact2
