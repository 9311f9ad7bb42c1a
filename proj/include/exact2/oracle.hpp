#pragma once

// Exhaustive enumeration over small trees. Nothing here calls into the
// recognition or rooting code; topologies, distances, rootings and
// isomorphism codes are computed from scratch so the results can serve as
// ground truth for the rest of the library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact2/graph.hpp"
#include "exact2/tree.hpp"

namespace exact2 {

struct EnumerationBudget {
  int max_leaves = 5;
  /// Largest edge weight tried; k + 1 when unset. Larger weights never change
  /// an exactly-k relation.
  std::optional<Weight> max_weight;
  /// Only trees without interior 0-edges.
  bool canonical_only = true;
  /// Only trees in which distinct leaves are never at distance 0.
  bool zero_discrete_only = false;

  Weight weight_cap(Weight k) const { return max_weight.value_or(k + 1); }
};

/// All phylogenetic topologies (interior degree >= 3) on the leaves "0".."n-1",
/// each exactly once, with every weight 0. Leaf i is vertex i. 1 <= n <= 7.
std::vector<LabeledTree> enumerate_topologies(int n);

/// Isomorphism invariant: the smallest edge (arc) bitmask over all vertex
/// permutations. At most 8 vertices.
std::uint64_t isomorphism_code(const Graph& g);
std::uint64_t isomorphism_code(const OrientedGraph& g);

/// Isomorphism classes keyed by vertex count and isomorphism_code. The stored
/// representative is the graph whose bitmask is the code.
struct GraphClasses {
  std::map<int, std::map<std::uint64_t, Graph>> by_order;

  bool contains(const Graph& g) const;
  std::size_t count(int n) const;
};

struct OrientedGraphClasses {
  std::map<int, std::map<std::uint64_t, OrientedGraph>> by_order;

  bool contains(const OrientedGraph& g) const;
  std::size_t count(int n) const;
};

/// Every graph on 1..max_order vertices up to isomorphism (max_order <= 6).
GraphClasses all_graphs(int max_order);
/// Every oriented graph on 1..max_order vertices up to isomorphism
/// (max_order <= 5).
OrientedGraphClasses all_oriented_graphs(int max_order);

/// Graphs explained at k by some tree with 1..max_leaves leaves and weights
/// within the budget (max_leaves <= 6).
GraphClasses explainable_set(const EnumerationBudget& budget, Weight k);

/// Every tree within the budget whose topology is phylogenetic and that
/// explains g at k, leaves named after the vertices of g. Trees are distinct
/// as leaf-labeled weighted trees. g has at most 6 vertices.
std::vector<LabeledTree> all_witnesses(const Graph& g, const EnumerationBudget& budget, Weight k);

/// Oriented graphs explained at k (directed relation) by a rooted tree with
/// 1..max_leaves leaves (max_leaves <= 5). Roots are tried at every interior
/// vertex and inside every edge, with all weights within the budget.
OrientedGraphClasses rooted_explainable_set(const EnumerationBudget& budget, Weight k);

/// Predicted membership, as stated by the characterizations: at k = 2 the
/// false-twin quotient (or, with zero_discrete, the graph itself) is a block
/// graph; at k = 1 it is a forest. Empty for other k.
std::optional<bool> predicted_explainable(const Graph& g, Weight k, bool zero_discrete);

/// Oriented prediction at k = 2: the directed false-twin quotient is an
/// oriented forest without induced x -> z <- y; with zero_discrete, the graph
/// itself must be such a forest. Empty for other k.
std::optional<bool> predicted_oriented_explainable(const OrientedGraph& g, Weight k, bool zero_discrete);

struct CharacterizationRow {
  int n = 0;
  std::size_t classes = 0;
  std::size_t explainable = 0;
  std::size_t predicted = 0;
  /// One-line edge lists of the graphs the oracle cannot explain.
  std::vector<std::string> non_members;
  /// Predicted but not explained, and explained but not predicted.
  std::vector<std::string> missing;
  std::vector<std::string> unexpected;
};

struct CharacterizationReport {
  Weight k = 2;
  EnumerationBudget budget;
  bool has_prediction = false;
  std::vector<CharacterizationRow> undirected;
  bool has_oriented = false;
  std::vector<CharacterizationRow> oriented;

  bool consistent() const;
  std::string text() const;
  /// Counts per n and discrepancy certificates in the graph text format.
  std::string json() const;
};

/// Compares the oracle against the predictions for every vertex count up to
/// budget.max_leaves. The oriented comparison runs when `oriented` is set,
/// k = 2 and max_leaves <= 5.
CharacterizationReport check_characterization(const EnumerationBudget& budget, Weight k, bool oriented = true);

}  // namespace exact2
