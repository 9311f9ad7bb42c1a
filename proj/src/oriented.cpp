#include "exact2/oriented.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "exact2/newick.hpp"

namespace exact2 {

namespace {

// Copy of `t` with edge e replaced by u -wu- root -wv- v.
RootedLabeledTree subdivide(const LabeledTree& t, int e, Weight wu, Weight wv) {
  RootedLabeledTree out;
  for (int v = 0; v < t.vertex_count(); ++v)
    t.is_leaf(v) ? out.tree.add_leaf(t.name(v)) : out.tree.add_interior(t.name(v));
  for (int f = 0; f < t.edge_count(); ++f)
    if (f != e) out.tree.add_edge(t.edge(f).u, t.edge(f).v, t.edge(f).weight);
  out.root = out.tree.add_interior();
  out.tree.add_edge(t.edge(e).u, out.root, wu);
  out.tree.add_edge(out.root, t.edge(e).v, wv);
  return out;
}

// Vertices of some cycle of a graph in traversal order, or empty for a
// forest.
std::vector<Vertex> find_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (w == parent[v]) continue;
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          stack.push_back(w);
          continue;
        }
        // Non-tree edge v-w closes a cycle through their common ancestor.
        std::vector<Vertex> up_v{v};
        std::vector<Vertex> up_w{w};
        Vertex a = v;
        Vertex b = w;
        while (depth[a] > depth[b]) up_v.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
        while (a != b) {
          up_v.push_back(a = parent[a]);
          up_w.push_back(b = parent[b]);
        }
        up_w.pop_back();
        up_v.insert(up_v.end(), up_w.rbegin(), up_w.rend());
        return up_v;
      }
    }
  }
  return {};
}

}  // namespace

OrientedGraph directed_explain(const RootedLabeledTree& t, Weight k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<int> parent;
  std::vector<Weight> up;
  t.parents(parent, up);
  const int n = t.tree.vertex_count();

  std::vector<int> depth(n, -1);
  std::vector<Weight> from_root(n, 0);
  // parents() lists every vertex; resolve depths by walking up lazily.
  auto resolve = [&](int v, auto&& self) -> void {
    if (depth[v] >= 0) return;
    if (parent[v] < 0) {
      depth[v] = 0;
      return;
    }
    self(parent[v], self);
    depth[v] = depth[parent[v]] + 1;
    from_root[v] = from_root[parent[v]] + up[v];
  };
  for (int v = 0; v < n; ++v) resolve(v, resolve);

  const auto leaves = t.tree.leaves();
  std::vector<VertexPair> arcs;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = 0; j < leaves.size(); ++j) {
      if (i == j) continue;
      int a = leaves[i];
      int b = leaves[j];
      while (depth[a] > depth[b]) a = parent[a];
      while (depth[b] > depth[a]) b = parent[b];
      while (a != b) {
        a = parent[a];
        b = parent[b];
      }
      if (from_root[leaves[i]] == from_root[a] && from_root[leaves[j]] - from_root[a] == k)
        arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  std::vector<std::string> names;
  for (int leaf : leaves) names.push_back(t.tree.name(leaf));
  return OrientedGraph::from_arc_list(static_cast<int>(leaves.size()), arcs).with_names(std::move(names));
}

LabeledTree underlying_tree(const RootedLabeledTree& t) { return t.tree; }

bool is_canonical(const RootedLabeledTree& t) {
  const LabeledTree& tree = t.tree;
  if (tree.vertex_count() == 1) return tree.is_leaf(0);
  if (tree.is_leaf(t.root) || tree.degree(t.root) < 2) return false;
  for (int v = 0; v < tree.vertex_count(); ++v)
    if (!tree.is_leaf(v) && v != t.root && tree.degree(v) < 3) return false;
  for (int e = 0; e < tree.edge_count(); ++e)
    if (tree.edge(e).weight == 0 && tree.is_interior_edge(e)) return false;
  return true;
}

std::vector<RootedLabeledTree> enumerate_rooted(const LabeledTree& t, LeafRooting leaf_rooting) {
  if (t.vertex_count() < 2) throw std::invalid_argument("rooting needs a tree with at least two vertices");
  if (!is_canonical(t)) throw std::invalid_argument("rooting needs a canonical tree");

  std::map<std::string, RootedLabeledTree> found;
  auto add = [&](RootedLabeledTree r) {
    std::string key = tree_key(r);
    found.emplace(std::move(key), std::move(r));
  };

  for (int v = 0; v < t.vertex_count(); ++v)
    if (!t.is_leaf(v)) add({t, v});

  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!t.is_leaf(v)) continue;
    const int e = t.incident_edges(v).front();
    const int w = t.opposite(e, v);
    const Weight weight = t.edge(e).weight;
    if (weight == 0 && !t.is_leaf(w)) continue;
    Weight at_leaf = leaf_rooting == LeafRooting::zero_at_leaf ? 0 : weight;
    Weight above = weight - at_leaf;
    if (t.edge(e).u == v)
      add(subdivide(t, e, at_leaf, above));
    else
      add(subdivide(t, e, above, at_leaf));
  }

  for (int e = 0; e < t.edge_count(); ++e) {
    const Weight m = t.edge(e).weight;
    for (Weight j = 1; j < m; ++j) add(subdivide(t, e, j, m - j));
  }

  std::vector<RootedLabeledTree> out;
  for (auto& [key, r] : found) out.push_back(std::move(r));
  return out;
}

OrientedRecognitionOutcome recognize_oriented(const OrientedGraph& d) {
  if (d.order() == 0) throw std::invalid_argument("empty graph");
  OrientedRecognitionOutcome outcome;
  const TwinPartition p = false_twin_partition(d);
  const OrientedGraph q = quotient(d, p);

  const auto cycle = find_cycle(underlying_graph(q));
  if (!cycle.empty()) {
    outcome.obstruction = OrientedObstruction::cycle;
    for (Vertex v : cycle) outcome.certificate.push_back(p.representative(v));
    return outcome;
  }
  for (Vertex z = 0; z < q.order(); ++z) {
    const auto in = q.in_neighbors(z);
    if (in.size() < 2) continue;
    outcome.obstruction = OrientedObstruction::in_star;
    outcome.certificate = {p.representative(in[0]), p.representative(z), p.representative(in[1])};
    return outcome;
  }
  outcome.explainable = true;
  outcome.witness = construct_oriented(d);
  return outcome;
}

RootedLabeledTree construct_oriented(const OrientedGraph& d) {
  if (d.order() == 0) throw std::invalid_argument("empty graph");
  const TwinPartition p = false_twin_partition(d);
  const OrientedGraph q = quotient(d, p);
  if (!find_cycle(underlying_graph(q)).empty())
    throw std::invalid_argument("graph is not explainable: its quotient contains a cycle");

  RootedLabeledTree out;
  LabeledTree& t = out.tree;
  // Builds the subtree of quotient vertex v and returns its top vertex.
  auto build = [&](Vertex v, auto&& self) -> int {
    const auto& members = p.classes[v];
    const auto children = q.out_neighbors(v);
    if (children.empty() && members.size() == 1) return t.add_leaf(d.name(members.front()));
    const int top = t.add_interior();
    for (Vertex x : members) t.add_edge(top, t.add_leaf(d.name(x)), 0);
    for (Vertex c : children) t.add_edge(top, self(c, self), 2);
    return top;
  };

  for (Vertex v = 0; v < q.order(); ++v)
    if (q.in_neighbors(v).size() > 1)
      throw std::invalid_argument("graph is not explainable: in-star at '" + q.name(v) + "'");
  std::vector<int> tops;
  for (Vertex v = 0; v < q.order(); ++v)
    if (q.in_neighbors(v).empty()) tops.push_back(build(v, build));

  if (tops.size() == 1) {
    out.root = tops.front();
    if (t.is_leaf(out.root)) {
      out.root = t.add_interior();
      t.add_edge(out.root, tops.front(), 0);
    }
  } else {
    out.root = t.add_interior();
    for (int top : tops) t.add_edge(out.root, top, 3);
  }
  if (!verify_oriented(out, d, 2)) throw std::logic_error("constructed rooted tree does not explain the input");
  return out;
}

bool verify_oriented(const RootedLabeledTree& t, const OrientedGraph& d, Weight k) {
  const auto leaf_names = t.tree.leaf_names();
  std::set<std::string> leaves(leaf_names.begin(), leaf_names.end());
  std::set<std::string> vertices(d.names().begin(), d.names().end());
  if (leaves != vertices) {
    std::string diff;
    for (const auto& name : leaves)
      if (!vertices.count(name)) diff += " leaf-only:" + name;
    for (const auto& name : vertices)
      if (!leaves.count(name)) diff += " vertex-only:" + name;
    throw std::invalid_argument("leaf names and vertex names differ:" + diff);
  }
  const OrientedGraph explained = directed_explain(t, k);
  if (explained.arc_count() != d.arc_count()) return false;
  for (auto [u, v] : explained.arcs())
    if (!d.has_arc(d.find(explained.name(u)), d.find(explained.name(v)))) return false;
  return true;
}

}  // namespace exact2
