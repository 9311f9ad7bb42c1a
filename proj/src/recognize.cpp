#include "exact2/recognize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace exact2 {

namespace {

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

// Copies `t` into `out`, returning the id map.
std::vector<int> append_tree(LabeledTree& out, const LabeledTree& t) {
  std::vector<int> id(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    id[v] = t.is_leaf(v) ? out.add_leaf(t.name(v)) : out.add_interior(t.name(v));
  for (const auto& e : t.edges()) out.add_edge(id[e.u], id[e.v], e.weight);
  return id;
}

// Gives every leaf of a one- or two-vertex tree an interior neighbour so that
// the blow-up has a place to attach siblings.
LabeledTree with_interior_neighbours(const LabeledTree& t) {
  if (t.vertex_count() == 1) {
    LabeledTree out;
    const int leaf = out.add_leaf(t.name(0));
    const int hub = out.add_interior();
    out.add_edge(hub, leaf, 0);
    return out;
  }
  if (t.vertex_count() == 2) {
    const auto& e = t.edge(0);
    LabeledTree out;
    const int a = out.add_leaf(t.name(e.u));
    const int b = out.add_leaf(t.name(e.v));
    const int p = out.add_interior();
    const int q = out.add_interior();
    out.add_edge(p, a, 0);
    out.add_edge(p, q, e.weight);
    out.add_edge(q, b, 0);
    return out;
  }
  return t;
}

}  // namespace

LabeledTree construct_block_tree(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("block tree construction needs at least two vertices");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("block tree construction needs a connected graph");
  const auto blocks = block_decomposition(g);
  for (const auto& block : blocks.blocks)
    if (!is_clique(g, block)) throw std::invalid_argument("graph is not a block graph");

  std::vector<char> cut(n, 0);
  for (Vertex v : blocks.cut_vertices) cut[v] = 1;

  LabeledTree t;
  std::vector<int> position(n);
  for (Vertex v = 0; v < n; ++v) position[v] = cut[v] ? t.add_interior() : t.add_leaf(g.name(v));
  for (const auto& block : blocks.blocks) {
    if (block.size() == 2) {
      t.add_edge(position[block[0]], position[block[1]], 2);
      continue;
    }
    const int center = t.add_interior();
    for (Vertex u : block) t.add_edge(position[u], center, 1);
  }
  for (Vertex v : blocks.cut_vertices) t.add_edge(position[v], t.add_leaf(g.name(v)), 0);
  return t;
}

LabeledTree blow_up(const LabeledTree& quotient_tree, const TwinPartition& p,
                    std::span<const std::string> names, Weight k) {
  enum class Expansion { none, siblings, hub };
  const int n = quotient_tree.vertex_count();
  std::vector<Expansion> expansion(n, Expansion::none);
  std::vector<const std::vector<Vertex>*> members(n, nullptr);

  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    const std::string& rep_name = names[cls.front()];
    const int leaf = quotient_tree.find_leaf(rep_name);
    if (leaf < 0) throw std::invalid_argument("representative '" + rep_name + "' is not a leaf of the tree");
    if (quotient_tree.degree(leaf) != 1)
      throw std::invalid_argument("representative '" + rep_name + "' has no neighbour");
    const int e = quotient_tree.incident_edges(leaf).front();
    if (quotient_tree.is_leaf(quotient_tree.opposite(e, leaf)))
      throw std::invalid_argument("representative '" + rep_name + "' hangs off another leaf");
    expansion[leaf] = 2 * quotient_tree.edge(e).weight == k ? Expansion::hub : Expansion::siblings;
    members[leaf] = &cls;
  }

  LabeledTree out;
  for (int v = 0; v < n; ++v)
    quotient_tree.is_leaf(v) ? out.add_leaf(quotient_tree.name(v)) : out.add_interior(quotient_tree.name(v));
  for (const auto& e : quotient_tree.edges()) {
    const int leaf = quotient_tree.is_leaf(e.u) ? e.u : (quotient_tree.is_leaf(e.v) ? e.v : -1);
    if (leaf < 0 || expansion[leaf] == Expansion::none) {
      out.add_edge(e.u, e.v, e.weight);
      continue;
    }
    const int q = e.u == leaf ? e.v : e.u;
    const auto& cls = *members[leaf];
    if (expansion[leaf] == Expansion::siblings) {
      out.add_edge(q, leaf, e.weight);
      for (std::size_t i = 1; i < cls.size(); ++i) out.add_edge(q, out.add_leaf(names[cls[i]]), e.weight);
    } else {
      const int hub = out.add_interior();
      out.add_edge(q, hub, e.weight);
      out.add_edge(hub, leaf, 0);
      for (std::size_t i = 1; i < cls.size(); ++i) out.add_edge(hub, out.add_leaf(names[cls[i]]), 0);
    }
  }
  return out;
}

LabeledTree join_components(std::span<const LabeledTree> trees, Weight k) {
  if (trees.empty()) throw std::invalid_argument("no trees to join");
  if (trees.size() == 1) return trees.front();

  LabeledTree out;
  std::vector<int> anchors;
  for (const auto& t : trees) {
    if (t.vertex_count() == 1) {
      const int leaf = out.add_leaf(t.name(0));
      const int hub = out.add_interior();
      out.add_edge(hub, leaf, 0);
      anchors.push_back(hub);
      continue;
    }
    if (t.vertex_count() == 2) {
      const auto& e = t.edge(0);
      const int a = out.add_leaf(t.name(e.u));
      const int b = out.add_leaf(t.name(e.v));
      const int mid = out.add_interior();
      out.add_edge(a, mid, e.weight - e.weight / 2);
      out.add_edge(mid, b, e.weight / 2);
      anchors.push_back(mid);
      continue;
    }
    const auto id = append_tree(out, t);
    int anchor = -1;
    for (int v = 0; v < t.vertex_count() && anchor < 0; ++v)
      if (!t.is_leaf(v)) anchor = id[v];
    if (anchor < 0) throw std::invalid_argument("component tree without interior vertex");
    anchors.push_back(anchor);
  }
  for (std::size_t i = 1; i < anchors.size(); ++i) out.add_edge(anchors[i - 1], anchors[i], k + 1);
  return out;
}

RecognitionOutcome recognize(const Graph& g, Weight k) {
  if (k != 2) throw std::invalid_argument("recognition is only available for k = 2");
  RecognitionOutcome outcome;
  if (g.order() == 0) throw std::invalid_argument("empty graph");

  const TwinPartition p = false_twin_partition(g);
  const Graph q = quotient(g, p);

  for (const auto& block : block_decomposition(q).blocks) {
    if (is_clique(q, block)) continue;
    for (Vertex v : block) outcome.certificate.push_back(p.representative(v));
    std::sort(outcome.certificate.begin(), outcome.certificate.end());
    return outcome;
  }

  std::vector<LabeledTree> trees;
  for (const auto& component : connected_components(q)) {
    if (component.size() == 1) {
      LabeledTree single;
      single.add_leaf(q.name(component.front()));
      trees.push_back(std::move(single));
    } else {
      trees.push_back(construct_block_tree(induced_subgraph(q, component)));
    }
  }
  LabeledTree joined = join_components(trees, k);
  if (!p.is_discrete()) joined = with_interior_neighbours(joined);
  outcome.explainable = true;
  outcome.witness = canonicalize(blow_up(joined, p, g.names(), k));
  if (!verify(*outcome.witness, g, k)) throw std::logic_error("constructed tree does not explain the input");
  return outcome;
}

bool verify(const LabeledTree& t, const Graph& g, Weight k) {
  const auto leaf_names = t.leaf_names();
  std::set<std::string> leaves(leaf_names.begin(), leaf_names.end());
  std::set<std::string> vertices(g.names().begin(), g.names().end());
  if (leaves != vertices) {
    std::string diff;
    for (const auto& name : leaves)
      if (!vertices.count(name)) diff += " leaf-only:" + name;
    for (const auto& name : vertices)
      if (!leaves.count(name)) diff += " vertex-only:" + name;
    throw std::invalid_argument("leaf names and vertex names differ:" + diff);
  }
  const Graph explained = explain(t, k);
  if (explained.edge_count() != g.edge_count()) return false;
  for (auto [u, v] : explained.edges())
    if (!g.adjacent(g.find(explained.name(u)), g.find(explained.name(v)))) return false;
  return true;
}

}  // namespace exact2
