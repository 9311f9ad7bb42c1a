#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exact2/graph.hpp"

namespace exact2 {

/// Number of events on an edge.
using Weight = std::int64_t;

struct TreeEdge {
  int u;
  int v;
  Weight weight;
};

/// Unrooted tree with non-negative integer edge weights.
///
/// Leaves are flagged explicitly and carry unique non-empty names; these are
/// the vertices of the explained graph. Interior vertices may be named (names
/// survive Newick round trips) but play no role in any relation.
class LabeledTree {
 public:
  int add_leaf(std::string name);
  int add_interior(std::string name = {});
  int add_edge(int u, int v, Weight weight);
  void set_weight(int edge, Weight weight);

  int vertex_count() const noexcept { return static_cast<int>(leaf_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool is_leaf(int v) const { return leaf_.at(v) != 0; }
  const std::string& name(int v) const { return names_.at(v); }
  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  std::span<const int> incident_edges(int v) const { return incident_.at(v); }

  const TreeEdge& edge(int e) const { return edges_.at(e); }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  int opposite(int e, int v) const;
  /// Edge joining u and v, or -1.
  int edge_between(int u, int v) const;
  /// Both endpoints are interior vertices.
  bool is_interior_edge(int e) const;

  /// Leaf vertex ids ordered by name_less on their names.
  std::vector<int> leaves() const;
  std::vector<std::string> leaf_names() const;
  int leaf_count() const;
  /// Leaf with the given name, or -1.
  int find_leaf(const std::string& name) const;

  /// Throws std::invalid_argument unless the tree is non-empty, connected,
  /// acyclic, has non-negative weights, and leaves have degree <= 1 and
  /// unique non-empty names.
  void validate() const;

 private:
  std::vector<char> leaf_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> incident_;
  std::vector<TreeEdge> edges_;
};

/// A LabeledTree together with a designated root vertex. Edges are oriented
/// away from the root.
struct RootedLabeledTree {
  LabeledTree tree;
  int root = 0;

  /// Parent of every vertex (-1 for the root) and the weight of the edge to
  /// the parent.
  void parents(std::vector<int>& parent, std::vector<Weight>& up_weight) const;
};

/// Path-weight sums between leaves; rows and columns follow `names`, which is
/// sorted by name_less.
struct DistanceMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<Weight>> entries;

  std::size_t size() const noexcept { return names.size(); }
  Weight operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

DistanceMatrix leaf_distance_matrix(const LabeledTree& t);

/// Graph on the leaves (ordered by name_less, named after them) with an edge
/// wherever the path weight equals k.
Graph explain(const LabeledTree& t, Weight k);

/// Multiplies every weight by c >= 1.
LabeledTree scale(const LabeledTree& t, Weight c);

/// Suppresses degree-2 interior vertices (summing weights) and contracts
/// interior 0-edges. Dangling unlabeled vertices are pruned first.
LabeledTree canonicalize(const LabeledTree& t);

/// Minimal subtree spanning the named leaves, then degree-2 suppression.
/// Throws std::invalid_argument for an empty subset or an unknown leaf.
LabeledTree restrict_leaves(const LabeledTree& t, std::span<const std::string> leaf_names);

/// Every interior vertex has degree >= 3 and every interior edge a positive
/// weight.
bool is_canonical(const LabeledTree& t);

/// No two distinct leaves at path weight 0.
bool is_zero_discrete(const LabeledTree& t);

/// Merges the endpoints of interior edge `e`, keeping all other weights.
/// Leaf edges are rejected: the leaf is a graph vertex.
LabeledTree contract_edge(const LabeledTree& t, int e);

}  // namespace exact2
