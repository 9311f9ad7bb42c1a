#include "exact2/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace exact2 {

// ------------------------------------------------------------ LabeledTree

int LabeledTree::add_leaf(std::string name) {
  leaf_.push_back(1);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return vertex_count() - 1;
}

int LabeledTree::add_interior(std::string name) {
  leaf_.push_back(0);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return vertex_count() - 1;
}

int LabeledTree::add_edge(int u, int v, Weight weight) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
    throw std::invalid_argument("invalid tree edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  if (weight < 0) throw std::invalid_argument("negative edge weight");
  edges_.push_back({u, v, weight});
  const int e = edge_count() - 1;
  incident_[u].push_back(e);
  incident_[v].push_back(e);
  return e;
}

void LabeledTree::set_weight(int edge, Weight weight) {
  if (weight < 0) throw std::invalid_argument("negative edge weight");
  edges_.at(edge).weight = weight;
}

int LabeledTree::opposite(int e, int v) const {
  const auto& edge = edges_.at(e);
  return edge.u == v ? edge.v : edge.u;
}

int LabeledTree::edge_between(int u, int v) const {
  for (int e : incident_.at(u))
    if (opposite(e, u) == v) return e;
  return -1;
}

bool LabeledTree::is_interior_edge(int e) const {
  const auto& edge = edges_.at(e);
  return !is_leaf(edge.u) && !is_leaf(edge.v);
}

std::vector<int> LabeledTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (leaf_[v]) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](int a, int b) { return name_less(names_[a], names_[b]); });
  return out;
}

std::vector<std::string> LabeledTree::leaf_names() const {
  std::vector<std::string> out;
  for (int v : leaves()) out.push_back(names_[v]);
  return out;
}

int LabeledTree::leaf_count() const {
  return static_cast<int>(std::count(leaf_.begin(), leaf_.end(), 1));
}

int LabeledTree::find_leaf(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (leaf_[v] && names_[v] == name) return v;
  return -1;
}

void LabeledTree::validate() const {
  const int n = vertex_count();
  if (n == 0) throw std::invalid_argument("empty tree");
  if (edge_count() != n - 1)
    throw std::invalid_argument("tree has " + std::to_string(n) + " vertices but " +
                                std::to_string(edge_count()) + " edges");
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int e : incident_[queue[i]]) {
      const int w = opposite(e, queue[i]);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  if (static_cast<int>(queue.size()) != n) throw std::invalid_argument("tree is not connected");
  std::unordered_set<std::string> names;
  for (int v = 0; v < n; ++v) {
    if (!leaf_[v]) continue;
    if (degree(v) > 1) throw std::invalid_argument("leaf '" + names_[v] + "' has degree > 1");
    if (names_[v].empty()) throw std::invalid_argument("unnamed leaf");
    if (!names.insert(names_[v]).second)
      throw std::invalid_argument("duplicate leaf name '" + names_[v] + "'");
  }
  for (const auto& edge : edges_)
    if (edge.weight < 0) throw std::invalid_argument("negative edge weight");
}

void RootedLabeledTree::parents(std::vector<int>& parent, std::vector<Weight>& up_weight) const {
  const int n = tree.vertex_count();
  parent.assign(n, -1);
  up_weight.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int e : tree.incident_edges(v)) {
      const int w = tree.opposite(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      up_weight[w] = tree.edge(e).weight;
      queue.push_back(w);
    }
  }
}

// ---------------------------------------------------------- editing

namespace {

// Adjacency-map copy of a tree used by the structural edits.
class Editable {
 public:
  explicit Editable(const LabeledTree& t)
      : adj_(t.vertex_count()), alive_(t.vertex_count(), 1), leaf_(t.vertex_count()),
        name_(t.vertex_count()) {
    for (int v = 0; v < t.vertex_count(); ++v) {
      leaf_[v] = t.is_leaf(v);
      name_[v] = t.name(v);
    }
    for (const auto& e : t.edges()) {
      adj_[e.u][e.v] = e.weight;
      adj_[e.v][e.u] = e.weight;
    }
  }

  int size() const { return static_cast<int>(adj_.size()); }
  bool alive(int v) const { return alive_[v] != 0; }
  bool leaf(int v) const { return leaf_[v] != 0; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::map<int, Weight>& neighbors(int v) const { return adj_[v]; }

  void remove(int v) {
    for (const auto& [w, weight] : adj_[v]) adj_[w].erase(v);
    adj_[v].clear();
    alive_[v] = 0;
  }

  // Replaces the degree-2 vertex v by a single edge carrying the summed weight.
  void suppress(int v) {
    auto it = adj_[v].begin();
    const auto [a, wa] = *it++;
    const auto [b, wb] = *it;
    remove(v);
    adj_[a][b] = wa + wb;
    adj_[b][a] = wa + wb;
  }

  // Merges `drop` into `keep`.
  void merge(int keep, int drop) {
    const auto nbrs = adj_[drop];
    remove(drop);
    for (const auto& [w, weight] : nbrs) {
      if (w == keep) continue;
      adj_[keep][w] = weight;
      adj_[w][keep] = weight;
    }
    if (name_[keep].empty()) name_[keep] = name_[drop];
  }

  // Removes unlabeled vertices of degree <= 1 until none remain.
  void prune_dangling() {
    std::deque<int> queue;
    for (int v = 0; v < size(); ++v)
      if (alive(v) && !leaf(v) && degree(v) <= 1) queue.push_back(v);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (!alive(v) || leaf(v) || degree(v) > 1) continue;
      std::vector<int> nbrs;
      for (const auto& [w, weight] : adj_[v]) nbrs.push_back(w);
      remove(v);
      for (int w : nbrs)
        if (!leaf(w) && degree(w) <= 1) queue.push_back(w);
    }
  }

  void suppress_degree_two() {
    for (int v = 0; v < size(); ++v)
      if (alive(v) && !leaf(v) && degree(v) == 2) suppress(v);
  }

  // Vertices keep their relative order; edges are listed by (min id, max id).
  LabeledTree compact() const {
    LabeledTree t;
    std::vector<int> id(size(), -1);
    for (int v = 0; v < size(); ++v) {
      if (!alive(v)) continue;
      id[v] = leaf(v) ? t.add_leaf(name_[v]) : t.add_interior(name_[v]);
    }
    for (int v = 0; v < size(); ++v)
      for (const auto& [w, weight] : adj_[v])
        if (v < w) t.add_edge(id[v], id[w], weight);
    return t;
  }

 private:
  std::vector<std::map<int, Weight>> adj_;
  std::vector<char> alive_;
  std::vector<char> leaf_;
  std::vector<std::string> name_;
};

// Path weights from `source` to every vertex.
std::vector<Weight> distances_from(const LabeledTree& t, int source) {
  std::vector<Weight> dist(t.vertex_count(), -1);
  std::vector<int> stack{source};
  dist[source] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : t.incident_edges(v)) {
      const int w = t.opposite(e, v);
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + t.edge(e).weight;
      stack.push_back(w);
    }
  }
  return dist;
}

}  // namespace

// --------------------------------------------------------- operations

DistanceMatrix leaf_distance_matrix(const LabeledTree& t) {
  const auto leaves = t.leaves();
  DistanceMatrix m;
  m.entries.assign(leaves.size(), std::vector<Weight>(leaves.size(), 0));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    m.names.push_back(t.name(leaves[i]));
    const auto dist = distances_from(t, leaves[i]);
    for (std::size_t j = 0; j < leaves.size(); ++j) m.entries[i][j] = dist[leaves[j]];
  }
  return m;
}

Graph explain(const LabeledTree& t, Weight k) {
  const auto m = leaf_distance_matrix(t);
  const int n = static_cast<int>(m.size());
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) == k) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges).with_names(m.names);
}

LabeledTree scale(const LabeledTree& t, Weight c) {
  if (c < 1) throw std::invalid_argument("scale factor must be positive");
  LabeledTree out = t;
  for (int e = 0; e < out.edge_count(); ++e) out.set_weight(e, t.edge(e).weight * c);
  return out;
}

LabeledTree canonicalize(const LabeledTree& t) {
  Editable work(t);
  work.prune_dangling();
  work.suppress_degree_two();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < work.size() && !changed; ++v) {
      if (!work.alive(v) || work.leaf(v)) continue;
      for (const auto& [w, weight] : work.neighbors(v)) {
        if (weight == 0 && !work.leaf(w)) {
          work.merge(std::min(v, w), std::max(v, w));
          changed = true;
          break;
        }
      }
    }
  }
  return work.compact();
}

LabeledTree restrict_leaves(const LabeledTree& t, std::span<const std::string> leaf_names) {
  if (leaf_names.empty()) throw std::invalid_argument("cannot restrict to an empty leaf set");
  std::vector<char> keep(t.vertex_count(), 0);
  for (const auto& name : leaf_names) {
    const int v = t.find_leaf(name);
    if (v < 0) throw std::invalid_argument("unknown leaf '" + name + "'");
    keep[v] = 1;
  }
  Editable work(t);
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.is_leaf(v) && !keep[v]) work.remove(v);
  work.prune_dangling();
  work.suppress_degree_two();
  return work.compact();
}

bool is_canonical(const LabeledTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!t.is_leaf(v) && t.degree(v) < 3) return false;
  for (int e = 0; e < t.edge_count(); ++e)
    if (t.is_interior_edge(e) && t.edge(e).weight == 0) return false;
  return true;
}

bool is_zero_discrete(const LabeledTree& t) {
  const auto m = leaf_distance_matrix(t);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) == 0) return false;
  return true;
}

LabeledTree contract_edge(const LabeledTree& t, int e) {
  if (!t.is_interior_edge(e)) throw std::invalid_argument("only interior edges can be contracted");
  const auto& edge = t.edge(e);
  Editable work(t);
  work.merge(std::min(edge.u, edge.v), std::max(edge.u, edge.v));
  return work.compact();
}

}  // namespace exact2
