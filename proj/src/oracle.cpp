#include "exact2/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "exact2/graph_io.hpp"

namespace exact2 {

namespace {

using Mask = std::uint64_t;

// Unweighted tree: leaves are 0..leaves-1, interior vertices follow.
struct Shape {
  int leaves = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

std::vector<std::vector<std::pair<int, int>>> adjacency(const Shape& s) {
  std::vector<std::vector<std::pair<int, int>>> adj(s.vertices);  // (neighbour, edge)
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
    adj[s.edges[e].first].emplace_back(s.edges[e].second, e);
    adj[s.edges[e].second].emplace_back(s.edges[e].first, e);
  }
  return adj;
}

// Serialization hung from leaf 0; identical exactly for leaf-labeled
// isomorphic shapes (and weightings, when given).
std::string shape_code(const Shape& s, const std::vector<Weight>* weights = nullptr) {
  const auto adj = adjacency(s);
  auto rec = [&](int v, int parent, auto&& self) -> std::string {
    if (v < s.leaves && parent >= 0) return std::to_string(v);
    std::vector<std::string> parts;
    for (auto [w, e] : adj[v]) {
      if (w == parent) continue;
      std::string part = self(w, v, self);
      if (weights) part += ':' + std::to_string((*weights)[e]);
      parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + ")";
  };
  return rec(0, -1, rec);
}

// All ways of adding leaf number s.leaves: on any edge or at any interior
// vertex.
std::vector<Shape> grow(const Shape& s) {
  const int leaf = s.leaves;
  Shape base{s.leaves + 1, s.vertices + 1, {}};
  for (auto [u, v] : s.edges) base.edges.emplace_back(u >= leaf ? u + 1 : u, v >= leaf ? v + 1 : v);

  std::vector<Shape> out;
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    Shape t = base;
    const int mid = t.vertices++;
    const auto [u, v] = t.edges[e];
    t.edges[e] = {u, mid};
    t.edges.emplace_back(mid, v);
    t.edges.emplace_back(mid, leaf);
    out.push_back(std::move(t));
  }
  for (int v = leaf + 1; v < base.vertices; ++v) {
    Shape t = base;
    t.edges.emplace_back(v, leaf);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Shape> shapes(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("leaf count must be between 1 and 7");
  if (n == 1) return {Shape{1, 1, {}}};
  std::vector<Shape> current{Shape{2, 2, {{0, 1}}}};
  for (int m = 3; m <= n; ++m) {
    std::vector<Shape> next;
    std::set<std::string> seen;
    for (const auto& s : current)
      for (auto& t : grow(s))
        if (seen.insert(shape_code(t)).second) next.push_back(std::move(t));
    current = std::move(next);
  }
  return current;
}

void check_budget(const EnumerationBudget& budget, Weight k, int max_leaves_limit) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (budget.max_leaves < 1 || budget.max_leaves > max_leaves_limit)
    throw std::invalid_argument("leaf budget must be between 1 and " + std::to_string(max_leaves_limit));
  if (budget.weight_cap(k) < 0) throw std::invalid_argument("weight cap must be non-negative");
}

// Edge ranges for the odometer over weightings.
std::vector<Weight> lower_bounds(const Shape& s, bool positive_interior, int root = -1) {
  std::vector<Weight> lo(s.edges.size(), 0);
  if (!positive_interior) return lo;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const auto [u, v] = s.edges[e];
    const bool u_inner = u >= s.leaves || u == root;
    const bool v_inner = v >= s.leaves || v == root;
    if (u_inner && v_inner) lo[e] = 1;
  }
  return lo;
}

// Calls visit(weights) for every weighting with lo[e] <= w[e] <= cap.
template <class Visit>
void for_each_weighting(const std::vector<Weight>& lo, Weight cap, Visit&& visit) {
  for (Weight l : lo)
    if (l > cap) return;
  std::vector<Weight> w = lo;
  for (;;) {
    visit(w);
    std::size_t i = 0;
    while (i < w.size() && w[i] == cap) {
      w[i] = lo[i];
      ++i;
    }
    if (i == w.size()) return;
    ++w[i];
  }
}

// Edges on the path between every pair of leaves i < j.
struct LeafPaths {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> edges;
};

LeafPaths leaf_paths(const Shape& s) {
  const auto adj = adjacency(s);
  LeafPaths out;
  for (int i = 0; i < s.leaves; ++i) {
    std::vector<int> parent(s.vertices, -1);
    std::vector<int> via(s.vertices, -1);
    std::vector<int> stack{i};
    parent[i] = i;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[v]) {
        if (parent[w] >= 0) continue;
        parent[w] = v;
        via[w] = e;
        stack.push_back(w);
      }
    }
    for (int j = i + 1; j < s.leaves; ++j) {
      std::vector<int> path;
      for (int v = j; v != i; v = parent[v]) path.push_back(via[v]);
      out.pairs.emplace_back(i, j);
      out.edges.push_back(std::move(path));
    }
  }
  return out;
}

Weight path_sum(const std::vector<int>& path, const std::vector<Weight>& w) {
  Weight sum = 0;
  for (int e : path) sum += w[e];
  return sum;
}

Mask bit(int i, int j, int n) { return Mask{1} << (i * n + j); }

// Labeled masks of the graphs explained by weightings of `s`.
std::unordered_set<Mask> explained_masks(const Shape& s, const EnumerationBudget& budget, Weight k) {
  std::unordered_set<Mask> out;
  const int n = s.leaves;
  if (n == 1) {
    out.insert(0);
    return out;
  }
  const LeafPaths paths = leaf_paths(s);
  for_each_weighting(lower_bounds(s, budget.canonical_only), budget.weight_cap(k), [&](const std::vector<Weight>& w) {
    Mask mask = 0;
    for (std::size_t p = 0; p < paths.pairs.size(); ++p) {
      const Weight d = path_sum(paths.edges[p], w);
      if (d == 0 && budget.zero_discrete_only) return;
      if (d == k) mask |= bit(paths.pairs[p].first, paths.pairs[p].second, n);
    }
    out.insert(mask);
  });
  return out;
}

// Rooting: parent structure with the root at an interior vertex or at a new
// vertex inside an edge.
struct RootedShape {
  Shape shape;
  int root;
};

std::vector<RootedShape> rootings(const Shape& s) {
  std::vector<RootedShape> out;
  for (int v = s.leaves; v < s.vertices; ++v) out.push_back({s, v});
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    Shape t = s;
    const int r = t.vertices++;
    const auto [u, v] = t.edges[e];
    t.edges[e] = {u, r};
    t.edges.emplace_back(r, v);
    out.push_back({std::move(t), r});
  }
  return out;
}

// For each leaf pair i < j: edges from i up to lca and from j up to lca.
struct RootedPaths {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> up_i;
  std::vector<std::vector<int>> up_j;
};

RootedPaths rooted_paths(const RootedShape& rs) {
  const Shape& s = rs.shape;
  const auto adj = adjacency(s);
  std::vector<int> parent(s.vertices, -1);
  std::vector<int> via(s.vertices, -1);
  std::vector<int> depth(s.vertices, -1);
  std::vector<int> stack{rs.root};
  depth[rs.root] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent[w] = v;
      via[w] = e;
      stack.push_back(w);
    }
  }
  RootedPaths out;
  for (int i = 0; i < s.leaves; ++i) {
    for (int j = i + 1; j < s.leaves; ++j) {
      std::vector<int> a_path;
      std::vector<int> b_path;
      int a = i;
      int b = j;
      while (depth[a] > depth[b]) {
        a_path.push_back(via[a]);
        a = parent[a];
      }
      while (depth[b] > depth[a]) {
        b_path.push_back(via[b]);
        b = parent[b];
      }
      while (a != b) {
        a_path.push_back(via[a]);
        b_path.push_back(via[b]);
        a = parent[a];
        b = parent[b];
      }
      out.pairs.emplace_back(i, j);
      out.up_i.push_back(std::move(a_path));
      out.up_j.push_back(std::move(b_path));
    }
  }
  return out;
}

std::unordered_set<Mask> directed_masks(const Shape& s, const EnumerationBudget& budget, Weight k) {
  std::unordered_set<Mask> out;
  const int n = s.leaves;
  if (n == 1) {
    out.insert(0);
    return out;
  }
  for (const auto& rs : rootings(s)) {
    const RootedPaths paths = rooted_paths(rs);
    const auto lo = lower_bounds(rs.shape, budget.canonical_only, rs.root);
    for_each_weighting(lo, budget.weight_cap(k), [&](const std::vector<Weight>& w) {
      Mask mask = 0;
      for (std::size_t p = 0; p < paths.pairs.size(); ++p) {
        const Weight a = path_sum(paths.up_i[p], w);
        const Weight b = path_sum(paths.up_j[p], w);
        if (a + b == 0 && budget.zero_discrete_only) return;
        const auto [i, j] = paths.pairs[p];
        if (a == 0 && b == k) mask |= bit(i, j, n);
        if (b == 0 && a == k) mask |= bit(j, i, n);
      }
      out.insert(mask);
    });
  }
  return out;
}

// Runs `collect` over all shapes on worker threads and unions the results.
template <class Collect>
std::set<Mask> collect_masks(const std::vector<Shape>& all, Collect collect) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), all.size()));
  std::vector<std::future<std::unordered_set<Mask>>> jobs;
  for (std::size_t t = 0; t < workers; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::unordered_set<Mask> found;
      for (std::size_t i = t; i < all.size(); i += workers) found.merge(collect(all[i]));
      return found;
    }));
  }
  std::set<Mask> out;
  for (auto& job : jobs) {
    const auto part = job.get();
    out.insert(part.begin(), part.end());
  }
  return out;
}

Mask permute(Mask mask, int n, const std::vector<int>& perm, bool directed) {
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !(mask & bit(i, j, n))) continue;
      int a = perm[i];
      int b = perm[j];
      if (!directed && a > b) std::swap(a, b);
      out |= bit(a, b, n);
    }
  }
  return out;
}

// Smallest image of every labeled mask, computed once per orbit.
class Classifier {
 public:
  Classifier(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 1 || n > 8) throw std::invalid_argument("isomorphism codes need 1 to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms_.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }

  Mask code(Mask mask) {
    if (auto it = known_.find(mask); it != known_.end()) return it->second;
    std::vector<Mask> orbit;
    Mask best = mask;
    for (const auto& perm : perms_) {
      const Mask image = permute(mask, n_, perm, directed_);
      orbit.push_back(image);
      best = std::min(best, image);
    }
    for (Mask image : orbit) known_.emplace(image, best);
    return best;
  }

 private:
  int n_;
  bool directed_;
  std::vector<std::vector<int>> perms_;
  std::unordered_map<Mask, Mask> known_;
};

Mask mask_of(const Graph& g) {
  Mask mask = 0;
  for (auto [u, v] : g.edges()) mask |= bit(u, v, g.order());
  return mask;
}

Mask mask_of(const OrientedGraph& g) {
  Mask mask = 0;
  for (auto [u, v] : g.arcs()) mask |= bit(u, v, g.order());
  return mask;
}

std::vector<VertexPair> pairs_of(Mask mask, int n) {
  std::vector<VertexPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (mask & bit(i, j, n))) out.emplace_back(i, j);
  return out;
}

Graph graph_of(Mask mask, int n) { return Graph::from_edge_list(n, pairs_of(mask, n)); }
OrientedGraph oriented_of(Mask mask, int n) { return OrientedGraph::from_arc_list(n, pairs_of(mask, n)); }

template <class Classes, class Make>
void add_classes(Classes& classes, int n, bool directed, const std::set<Mask>& masks, Make make) {
  Classifier classifier(n, directed);
  auto& bucket = classes.by_order[n];
  for (Mask mask : masks) {
    const Mask code = classifier.code(mask);
    if (!bucket.count(code)) bucket.emplace(code, make(code, n));
  }
}

bool has_induced_in_star(const OrientedGraph& g) {
  for (Vertex z = 0; z < g.order(); ++z) {
    const auto in = g.in_neighbors(z);
    for (std::size_t a = 0; a < in.size(); ++a)
      for (std::size_t b = a + 1; b < in.size(); ++b)
        if (!g.has_arc(in[a], in[b]) && !g.has_arc(in[b], in[a])) return true;
  }
  return false;
}

std::string edge_line(const std::vector<VertexPair>& pairs, int n, const char* sep) {
  std::ostringstream out;
  out << "n=" << n << ':';
  if (pairs.empty()) out << " (no edges)";
  for (auto [u, v] : pairs) out << ' ' << u << sep << v;
  return out.str();
}

std::string describe(const Graph& g) { return edge_line(g.edges(), g.order(), "-"); }
std::string describe(const OrientedGraph& g) { return edge_line(g.arcs(), g.order(), ">"); }

template <class Classes, class Predict>
CharacterizationRow compare(int n, const Classes& everything, const Classes& explained, Predict predict,
                            bool& has_prediction) {
  CharacterizationRow row;
  row.n = n;
  const auto all_it = everything.by_order.find(n);
  if (all_it == everything.by_order.end()) return row;
  row.classes = all_it->second.size();
  row.explainable = explained.count(n);
  const auto ex_it = explained.by_order.find(n);
  for (const auto& [code, g] : all_it->second) {
    const bool is_explained = ex_it != explained.by_order.end() && ex_it->second.count(code);
    if (!is_explained) row.non_members.push_back(describe(g));
    const std::optional<bool> predicted = predict(g);
    has_prediction = predicted.has_value();
    if (!predicted) continue;
    if (*predicted) ++row.predicted;
    if (*predicted && !is_explained) row.missing.push_back(describe(g));
    if (!*predicted && is_explained) row.unexpected.push_back(describe(g));
  }
  return row;
}

}  // namespace

std::vector<LabeledTree> enumerate_topologies(int n) {
  std::vector<LabeledTree> out;
  for (const auto& s : shapes(n)) {
    LabeledTree t;
    for (int v = 0; v < s.vertices; ++v) v < s.leaves ? t.add_leaf(std::to_string(v)) : t.add_interior();
    for (auto [u, v] : s.edges) t.add_edge(u, v, 0);
    out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t isomorphism_code(const Graph& g) { return Classifier(g.order(), false).code(mask_of(g)); }
std::uint64_t isomorphism_code(const OrientedGraph& g) { return Classifier(g.order(), true).code(mask_of(g)); }

bool GraphClasses::contains(const Graph& g) const {
  const auto it = by_order.find(g.order());
  return it != by_order.end() && it->second.count(isomorphism_code(g));
}

std::size_t GraphClasses::count(int n) const {
  const auto it = by_order.find(n);
  return it == by_order.end() ? 0 : it->second.size();
}

bool OrientedGraphClasses::contains(const OrientedGraph& g) const {
  const auto it = by_order.find(g.order());
  return it != by_order.end() && it->second.count(isomorphism_code(g));
}

std::size_t OrientedGraphClasses::count(int n) const {
  const auto it = by_order.find(n);
  return it == by_order.end() ? 0 : it->second.size();
}

GraphClasses all_graphs(int max_order) {
  if (max_order < 1 || max_order > 6) throw std::invalid_argument("graph order must be between 1 and 6");
  GraphClasses out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<Mask> pair_bits;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_bits.push_back(bit(i, j, n));
    std::set<Mask> masks;
    for (Mask choice = 0; choice < (Mask{1} << pair_bits.size()); ++choice) {
      Mask mask = 0;
      for (std::size_t b = 0; b < pair_bits.size(); ++b)
        if (choice >> b & 1) mask |= pair_bits[b];
      masks.insert(mask);
    }
    add_classes(out, n, false, masks, graph_of);
  }
  return out;
}

OrientedGraphClasses all_oriented_graphs(int max_order) {
  if (max_order < 1 || max_order > 5) throw std::invalid_argument("oriented graph order must be between 1 and 5");
  OrientedGraphClasses out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<Mask> masks;
    std::vector<int> state(pairs.size(), 0);  // 0 none, 1 i->j, 2 j->i
    for (;;) {
      Mask mask = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (state[p] == 1) mask |= bit(pairs[p].first, pairs[p].second, n);
        if (state[p] == 2) mask |= bit(pairs[p].second, pairs[p].first, n);
      }
      masks.insert(mask);
      std::size_t p = 0;
      while (p < state.size() && state[p] == 2) state[p++] = 0;
      if (p == state.size()) break;
      ++state[p];
    }
    add_classes(out, n, true, masks, oriented_of);
  }
  return out;
}

GraphClasses explainable_set(const EnumerationBudget& budget, Weight k) {
  check_budget(budget, k, 6);
  GraphClasses out;
  for (int n = 1; n <= budget.max_leaves; ++n) {
    const auto masks = collect_masks(shapes(n), [&](const Shape& s) { return explained_masks(s, budget, k); });
    add_classes(out, n, false, masks, graph_of);
  }
  return out;
}

std::vector<LabeledTree> all_witnesses(const Graph& g, const EnumerationBudget& budget, Weight k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.order();
  if (n < 1 || n > 6) throw std::invalid_argument("witness search needs 1 to 6 vertices");
  if (budget.weight_cap(k) < 0) throw std::invalid_argument("weight cap must be non-negative");
  const Mask target = mask_of(g);

  std::map<std::string, LabeledTree> found;
  for (const auto& s : shapes(n)) {
    auto record = [&](const std::vector<Weight>& w) {
      LabeledTree t;
      for (int v = 0; v < s.vertices; ++v) v < s.leaves ? t.add_leaf(g.name(v)) : t.add_interior();
      for (std::size_t e = 0; e < s.edges.size(); ++e) t.add_edge(s.edges[e].first, s.edges[e].second, w[e]);
      found.emplace(shape_code(s, &w), std::move(t));
    };
    if (n == 1) {
      record({});
      continue;
    }
    const LeafPaths paths = leaf_paths(s);
    for_each_weighting(lower_bounds(s, budget.canonical_only), budget.weight_cap(k), [&](const std::vector<Weight>& w) {
      Mask mask = 0;
      for (std::size_t p = 0; p < paths.pairs.size(); ++p) {
        const Weight d = path_sum(paths.edges[p], w);
        if (d == 0 && budget.zero_discrete_only) return;
        if (d == k) mask |= bit(paths.pairs[p].first, paths.pairs[p].second, n);
      }
      if (mask == target) record(w);
    });
  }
  std::vector<LabeledTree> out;
  for (auto& [code, t] : found) out.push_back(std::move(t));
  return out;
}

OrientedGraphClasses rooted_explainable_set(const EnumerationBudget& budget, Weight k) {
  check_budget(budget, k, 5);
  OrientedGraphClasses out;
  for (int n = 1; n <= budget.max_leaves; ++n) {
    const auto masks = collect_masks(shapes(n), [&](const Shape& s) { return directed_masks(s, budget, k); });
    add_classes(out, n, true, masks, oriented_of);
  }
  return out;
}

std::optional<bool> predicted_explainable(const Graph& g, Weight k, bool zero_discrete) {
  if (k != 1 && k != 2) return std::nullopt;
  const Graph subject = zero_discrete ? g : quotient(g, false_twin_partition(g));
  return k == 2 ? is_block_graph(subject) : is_forest(subject);
}

std::optional<bool> predicted_oriented_explainable(const OrientedGraph& g, Weight k, bool zero_discrete) {
  if (k != 2) return std::nullopt;
  const OrientedGraph subject = zero_discrete ? g : quotient(g, false_twin_partition(g));
  return is_forest(underlying_graph(subject)) && !has_induced_in_star(subject);
}

bool CharacterizationReport::consistent() const {
  for (const auto* rows : {&undirected, &oriented})
    for (const auto& row : *rows)
      if (!row.missing.empty() || !row.unexpected.empty()) return false;
  return true;
}

std::string CharacterizationReport::text() const {
  std::ostringstream out;
  out << "oracle k=" << k << " max-leaves=" << budget.max_leaves << " max-weight=" << budget.weight_cap(k)
      << " canonical-only=" << (budget.canonical_only ? "yes" : "no")
      << " zero-discrete=" << (budget.zero_discrete_only ? "yes" : "no") << '\n';
  auto section = [&](const char* label, const std::vector<CharacterizationRow>& rows) {
    for (const auto& row : rows) {
      out << label << " n=" << row.n << " classes=" << row.classes << " explainable=" << row.explainable;
      if (has_prediction) {
        out << " predicted=" << row.predicted << " missing=" << row.missing.size()
            << " unexpected=" << row.unexpected.size();
      }
      out << '\n';
      for (const auto& g : row.non_members) out << "  non-member " << g << '\n';
      for (const auto& g : row.missing) out << "  MISSING " << g << '\n';
      for (const auto& g : row.unexpected) out << "  UNEXPECTED " << g << '\n';
    }
  };
  section("undirected", undirected);
  section("oriented", oriented);
  if (!has_prediction)
    out << "result: no characterization to compare against\n";
  else
    out << "result: " << (consistent() ? "consistent" : "DISCREPANCIES FOUND") << '\n';
  return out.str();
}

std::string CharacterizationReport::json() const {
  using nlohmann::json;
  auto rows_json = [](const std::vector<CharacterizationRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
      out.push_back({{"n", row.n},
                     {"classes", row.classes},
                     {"explainable", row.explainable},
                     {"predicted", row.predicted},
                     {"non_members", row.non_members},
                     {"missing", row.missing},
                     {"unexpected", row.unexpected}});
    }
    return out;
  };
  json out = {{"k", k},
              {"budget",
               {{"max_leaves", budget.max_leaves},
                {"max_weight", budget.weight_cap(k)},
                {"canonical_only", budget.canonical_only},
                {"zero_discrete_only", budget.zero_discrete_only}}},
              {"undirected", rows_json(undirected)},
              {"oriented", rows_json(oriented)},
              {"has_prediction", has_prediction},
              {"consistent", consistent()}};
  return out.dump(2) + "\n";
}

CharacterizationReport check_characterization(const EnumerationBudget& budget, Weight k, bool oriented) {
  check_budget(budget, k, 6);
  CharacterizationReport report;
  report.k = k;
  report.budget = budget;

  const GraphClasses everything = all_graphs(budget.max_leaves);
  const GraphClasses explained = explainable_set(budget, k);
  bool predicted = false;
  for (int n = 1; n <= budget.max_leaves; ++n) {
    report.undirected.push_back(compare(
        n, everything, explained,
        [&](const Graph& g) { return predicted_explainable(g, k, budget.zero_discrete_only); }, predicted));
  }
  report.has_prediction = predicted;

  if (oriented && k == 2 && budget.max_leaves <= 5) {
    report.has_oriented = true;
    const OrientedGraphClasses all_oriented = all_oriented_graphs(budget.max_leaves);
    const OrientedGraphClasses rooted = rooted_explainable_set(budget, k);
    bool unused = false;
    for (int n = 1; n <= budget.max_leaves; ++n) {
      report.oriented.push_back(compare(
          n, all_oriented, rooted,
          [&](const OrientedGraph& g) { return predicted_oriented_explainable(g, k, budget.zero_discrete_only); },
          unused));
    }
  }
  return report;
}

}  // namespace exact2
