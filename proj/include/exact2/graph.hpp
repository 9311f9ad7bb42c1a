#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace exact2 {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Compares vertex/leaf names: names made only of digits compare numerically
/// and sort before all other names, which compare lexicographically.
bool name_less(const std::string& a, const std::string& b);

/// Undirected simple graph on the dense vertex ids 0..n-1.
///
/// Every vertex carries a name (defaulting to its decimal id). Names are what
/// ties a graph vertex to a tree leaf; equality compares structure and names.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds a simple graph, dropping duplicate and reversed pairs.
  /// Throws std::invalid_argument naming the first self-loop or
  /// out-of-range pair.
  static Graph from_edge_list(int n, std::span<const VertexPair> pairs);

  /// Same graph with the given vertex names (one per vertex, unique).
  Graph with_names(std::vector<std::string> names) const;

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<VertexPair> edges() const;

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Vertex with the given name, or -1.
  Vertex find(const std::string& name) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> names_;
  std::size_t edge_count_ = 0;
};

/// Directed graph without self-loops and without 2-cycles.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);

  /// Throws std::invalid_argument on self-loops, out-of-range ids and on
  /// antiparallel arc pairs.
  static OrientedGraph from_arc_list(int n, std::span<const VertexPair> arcs);

  OrientedGraph with_names(std::vector<std::string> names) const;

  int order() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex from, Vertex to) const;
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }

  /// Arcs sorted lexicographically.
  std::vector<VertexPair> arcs() const;

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Vertex find(const std::string& name) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> names_;
  std::size_t arc_count_ = 0;
};

/// Partition of the vertex set into false-twin classes.
///
/// Classes are sorted internally and ordered by their smallest vertex, which
/// is also the class representative.
struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> class_of;

  std::size_t size() const noexcept { return classes.size(); }
  Vertex representative(std::size_t i) const { return classes.at(i).front(); }
  bool is_discrete() const noexcept { return classes.size() == class_of.size(); }

  friend bool operator==(const TwinPartition&, const TwinPartition&) = default;
};

struct BlockDecomposition {
  /// Vertex sets of the maximal 2-connected subgraphs and bridges; each set is
  /// sorted and the list is sorted lexicographically.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};

/// Open neighbourhood classes: x ~ y iff N(x) = N(y).
TwinPartition false_twin_partition(const Graph& g);
/// x ~ y iff x and y have the same in- and the same out-neighbours.
TwinPartition false_twin_partition(const OrientedGraph& g);

/// Graph on the classes of `p`: class i becomes vertex i and keeps the name
/// of its representative. Throws std::invalid_argument unless `p` is the
/// false-twin partition of `g`.
Graph quotient(const Graph& g, const TwinPartition& p);
OrientedGraph quotient(const OrientedGraph& g, const TwinPartition& p);

/// Components as sorted vertex sets, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

BlockDecomposition block_decomposition(const Graph& g);

/// True iff every block induces a complete graph.
bool is_block_graph(const Graph& g);

bool is_forest(const Graph& g);

/// Subgraph induced by `vertices` (deduplicated and sorted first); vertex i of
/// the result is the i-th smallest selected vertex and keeps its name.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Disjoint union; vertices of `b` follow those of `a`. Names must stay
/// unique.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge-preserving bijection test (names ignored). Backtracking with degree
/// pruning; intended for graphs of at most eight vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Forgets arc directions.
Graph underlying_graph(const OrientedGraph& d);

}  // namespace exact2
