#include "exact2/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace exact2 {

namespace {

std::string pair_text(const VertexPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

void check_names(const std::vector<std::string>& names, int n) {
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " vertex names, got " +
                                std::to_string(names.size()));
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw std::invalid_argument("empty vertex name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate vertex name '" + name + "'");
  }
}

void check_pair(int n, const VertexPair& p) {
  if (p.first < 0 || p.second < 0 || p.first >= n || p.second >= n)
    throw std::invalid_argument("vertex id out of range in pair " + pair_text(p));
  if (p.first == p.second) throw std::invalid_argument("self-loop " + pair_text(p));
}

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool name_less(const std::string& a, const std::string& b) {
  const bool da = is_digits(a);
  const bool db = is_digits(b);
  if (da != db) return da;
  if (!da) return a < b;
  auto strip = [](const std::string& s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string::npos ? std::string_view("0") : std::string_view(s).substr(first);
  };
  const auto sa = strip(a);
  const auto sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : adjacency_(n), names_(default_names(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edge_list(int n, std::span<const VertexPair> pairs) {
  Graph g(n);
  for (const auto& p : pairs) {
    check_pair(n, p);
    g.adjacency_[p.first].push_back(p.second);
    g.adjacency_[p.second].push_back(p.first);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph Graph::with_names(std::vector<std::string> names) const {
  check_names(names, order());
  Graph g = *this;
  g.names_ = std::move(names);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<Vertex>(it - names_.begin());
}

// -------------------------------------------------------- OrientedGraph

OrientedGraph::OrientedGraph(int n) : out_(n), in_(n), names_(default_names(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

OrientedGraph OrientedGraph::from_arc_list(int n, std::span<const VertexPair> arcs) {
  OrientedGraph d(n);
  for (const auto& a : arcs) {
    check_pair(n, a);
    d.out_[a.first].push_back(a.second);
    d.in_[a.second].push_back(a.first);
  }
  std::size_t count = 0;
  for (int v = 0; v < n; ++v) {
    for (auto* list : {&d.out_[v], &d.in_[v]}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    count += d.out_[v].size();
  }
  d.arc_count_ = count;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : d.out_[u])
      if (d.has_arc(v, u))
        throw std::invalid_argument("antiparallel arcs " + pair_text({u, v}) + " and " +
                                    pair_text({v, u}));
  return d;
}

OrientedGraph OrientedGraph::with_names(std::vector<std::string> names) const {
  check_names(names, order());
  OrientedGraph d = *this;
  d.names_ = std::move(names);
  return d;
}

bool OrientedGraph::has_arc(Vertex from, Vertex to) const {
  const auto& nbrs = out_.at(from);
  return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

std::vector<VertexPair> OrientedGraph::arcs() const {
  std::vector<VertexPair> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  return out;
}

Vertex OrientedGraph::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<Vertex>(it - names_.begin());
}

// ------------------------------------------------------------ twins

namespace {

template <typename Key>
TwinPartition partition_by_key(int n, const std::function<Key(Vertex)>& key_of) {
  std::map<Key, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups[key_of(v)].push_back(v);
  TwinPartition p;
  for (auto& [key, members] : groups) p.classes.push_back(std::move(members));
  std::sort(p.classes.begin(), p.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.class_of.assign(n, -1);
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (Vertex v : p.classes[i]) p.class_of[v] = static_cast<int>(i);
  return p;
}

}  // namespace

TwinPartition false_twin_partition(const Graph& g) {
  return partition_by_key<std::vector<Vertex>>(g.order(), [&](Vertex v) {
    auto nbrs = g.neighbors(v);
    return std::vector<Vertex>(nbrs.begin(), nbrs.end());
  });
}

TwinPartition false_twin_partition(const OrientedGraph& g) {
  using Key = std::pair<std::vector<Vertex>, std::vector<Vertex>>;
  return partition_by_key<Key>(g.order(), [&](Vertex v) {
    auto in = g.in_neighbors(v);
    auto out = g.out_neighbors(v);
    return Key{{in.begin(), in.end()}, {out.begin(), out.end()}};
  });
}

Graph quotient(const Graph& g, const TwinPartition& p) {
  if (p != false_twin_partition(g))
    throw std::invalid_argument("partition is not the false-twin partition of the graph");
  const int h = static_cast<int>(p.size());
  std::vector<VertexPair> edges;
  std::vector<std::string> names(h);
  for (int i = 0; i < h; ++i) {
    const Vertex r = p.representative(i);
    names[i] = g.name(r);
    for (Vertex w : g.neighbors(r)) {
      const int j = p.class_of[w];
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(h, edges).with_names(std::move(names));
}

OrientedGraph quotient(const OrientedGraph& g, const TwinPartition& p) {
  if (p != false_twin_partition(g))
    throw std::invalid_argument("partition is not the false-twin partition of the graph");
  const int h = static_cast<int>(p.size());
  std::vector<VertexPair> arcs;
  std::vector<std::string> names(h);
  for (int i = 0; i < h; ++i) {
    const Vertex r = p.representative(i);
    names[i] = g.name(r);
    for (Vertex w : g.out_neighbors(r)) arcs.emplace_back(i, p.class_of[w]);
  }
  return OrientedGraph::from_arc_list(h, arcs).with_names(std::move(names));
}

// ---------------------------------------------------- decompositions

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < component.size(); ++i)
      for (Vertex w : g.neighbors(component[i]))
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<VertexPair> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      const Vertex v = stack.back().v;
      const auto nbrs = g.neighbors(v);
      if (stack.back().next < nbrs.size()) {
        const Vertex w = nbrs[stack.back().next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, v, 0});
        } else if (w != stack.back().parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<Vertex> block;
        for (;;) {
          const VertexPair e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == VertexPair{parent, v}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<int> membership(n, 0);
  for (const auto& block : out.blocks)
    for (Vertex v : block) ++membership[v];
  for (Vertex v = 0; v < n; ++v)
    if (membership[v] >= 2) out.cut_vertices.push_back(v);
  return out;
}

bool is_block_graph(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks) {
    const std::size_t s = block.size();
    std::size_t inner = 0;
    for (Vertex v : block)
      for (Vertex w : g.neighbors(v))
        if (std::binary_search(block.begin(), block.end(), w)) ++inner;
    if (inner != s * (s - 1)) return false;
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_id(g.order(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Vertex v = keep[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    new_id[v] = static_cast<int>(i);
    names.push_back(g.name(v));
  }
  std::vector<VertexPair> edges;
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v))
      if (v < w && new_id[w] >= 0) edges.emplace_back(new_id[v], new_id[w]);
  return Graph::from_edge_list(static_cast<int>(keep.size()), edges).with_names(std::move(names));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.order();
  std::vector<VertexPair> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  return Graph::from_edge_list(offset + b.order(), edges).with_names(std::move(names));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  // Map high-degree vertices first; they constrain the search most.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dg[a] > dg[b]; });

  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || dh[w] != dg[v]) continue;
      bool consistent = true;
      for (int i = 0; i < depth && consistent; ++i) {
        const Vertex u = order[i];
        consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  return extend(0);
}

Graph underlying_graph(const OrientedGraph& d) {
  const auto arcs = d.arcs();
  return Graph::from_edge_list(d.order(), arcs).with_names(d.names());
}

}  // namespace exact2
