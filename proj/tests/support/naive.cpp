#include "support/naive.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace exact2::testing {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

bool connected_subset(const Graph& g, unsigned subset) {
  const int first = __builtin_ctz(subset);
  unsigned seen = 1u << first;
  std::vector<int> stack{first};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!(subset >> w & 1) || (seen >> w & 1)) continue;
      seen |= 1u << w;
      stack.push_back(w);
    }
  }
  return seen == subset;
}

}  // namespace

bool naive_is_block_graph(const Graph& g) {
  const int n = g.order();
  for (unsigned subset = 1; subset < (1u << n); ++subset) {
    const int size = popcount(subset);
    if (size < 4) continue;
    int edges = 0;
    bool all_degree_two = true;
    for (int v = 0; v < n; ++v) {
      if (!(subset >> v & 1)) continue;
      int degree = 0;
      for (Vertex w : g.neighbors(v))
        if (subset >> w & 1) ++degree;
      edges += degree;
      if (degree != 2) all_degree_two = false;
    }
    edges /= 2;
    if (all_degree_two && connected_subset(g, subset)) return false;  // induced cycle
    if (size == 4 && edges == 5) return false;                         // diamond
  }
  return true;
}

bool naive_is_forest(const Graph& g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (auto [u, v] : g.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Graph naive_quotient(const Graph& g) {
  std::map<std::vector<Vertex>, Vertex> first;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> key(g.neighbors(v).begin(), g.neighbors(v).end());
    if (first.emplace(key, v).second) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph naive_explain(const LabeledTree& t, Weight k) {
  const int n = t.vertex_count();
  const Weight inf = std::numeric_limits<Weight>::max() / 4;
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : t.edges()) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);

  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (t.is_leaf(v)) leaves.push_back(v);
  std::sort(leaves.begin(), leaves.end(), [&](int a, int b) { return name_less(t.name(a), t.name(b)); });
  std::vector<VertexPair> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    names.push_back(t.name(leaves[i]));
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (d[leaves[i]][leaves[j]] == k) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::from_edge_list(static_cast<int>(leaves.size()), pairs).with_names(names);
}

std::uint64_t rooted_phylogenetic_count(int m) {
  if (m == 1) return 1;
  // Enumerate set partitions as restricted growth strings.
  std::vector<std::uint64_t> below(m + 1, 0);
  for (int i = 1; i < m; ++i) below[i] = rooted_phylogenetic_count(i);
  std::uint64_t total = 0;
  std::vector<int> block(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      if (blocks < 2) return;
      std::vector<int> sizes(blocks, 0);
      for (int b : block) ++sizes[b];
      std::uint64_t product = 1;
      for (int s : sizes) product *= below[s];
      total += product;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return total;
}

bool naive_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace exact2::testing
