#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>

#include "exact2/error.hpp"
#include "exact2/graph_io.hpp"
#include "exact2/newick.hpp"
#include "exact2/oracle.hpp"
#include "exact2/oriented.hpp"
#include "exact2/recognize.hpp"

namespace exact2::cli {

namespace {

// Input problems that should be reported with the offending file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

template <class Parse>
auto parse_file(const std::string& path, Parse parse) {
  const std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Graph files may name their vertices with a "# vertices: a b c" comment,
// which is what the explain subcommand writes.
constexpr std::string_view kNamesPrefix = "# vertices:";

std::vector<std::string> vertex_names_comment(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(kNamesPrefix, 0) != 0) continue;
    std::istringstream words(line.substr(kNamesPrefix.size()));
    std::vector<std::string> names;
    for (std::string w; words >> w;) names.push_back(w);
    return names;
  }
  return {};
}

template <class G>
G apply_names(G g, const std::string& text, const std::string& path) {
  auto names = vertex_names_comment(text);
  if (names.empty()) return g;
  if (static_cast<int>(names.size()) != g.order())
    throw InputError(path + ": the vertices comment lists " + std::to_string(names.size()) + " names for " +
                     std::to_string(g.order()) + " vertices");
  return g.with_names(std::move(names));
}

Graph load_graph(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return apply_names(parse_graph(text), text, path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

OrientedGraph load_oriented_graph(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return apply_names(parse_oriented_graph(text), text, path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class G>
bool default_names(const G& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.name(v) != std::to_string(v)) return false;
  return true;
}

template <class G>
std::string names_comment(const G& g) {
  if (default_names(g)) return {};
  std::string line(kNamesPrefix);
  for (const auto& name : g.names()) line += ' ' + name;
  return line + '\n';
}

std::string graph_text(const Graph& g, bool dot) { return dot ? to_dot(g) : names_comment(g) + format_graph(g); }
std::string graph_text(const OrientedGraph& g, bool dot) {
  return dot ? to_dot(g) : names_comment(g) + format_oriented_graph(g);
}

template <class T>
std::string tree_text(const T& t, bool dot) {
  return dot ? to_dot(t) : to_newick(t) + '\n';
}

template <class G>
std::string vertex_list(const G& g, const std::vector<Vertex>& vertices) {
  std::string out;
  for (Vertex v : vertices) out += ' ' + g.name(v);
  return out;
}

struct Options {
  std::string tree;
  std::string graph;
  Weight k = 2;
  bool rooted = false;
  bool oriented = false;
  bool dot = false;
  bool weight_at_leaf = false;
  std::string out;
  int n = 5;
  Weight max_weight = -1;
  bool zero_discrete = false;
  bool canonical_only = true;
};

int cmd_explain(const Options& o, std::string& result) {
  if (o.rooted) {
    const auto t = parse_file(o.tree, parse_rooted_tree);
    result = graph_text(directed_explain(t, o.k), o.dot);
  } else {
    const auto t = parse_file(o.tree, parse_tree);
    result = graph_text(explain(t, o.k), o.dot);
  }
  return kYes;
}

int cmd_recognize(const Options& o, std::string& result) {
  if (o.oriented) {
    const OrientedGraph d = load_oriented_graph(o.graph);
    const auto outcome = recognize_oriented(d);
    if (outcome.explainable) {
      result = "yes\n" + tree_text(*outcome.witness, o.dot);
      return kYes;
    }
    const char* label = outcome.obstruction == OrientedObstruction::cycle ? "cycle:" : "in-star:";
    result = std::string("no\n") + label + vertex_list(d, outcome.certificate) + '\n';
    return kNo;
  }
  const Graph g = load_graph(o.graph);
  const auto outcome = recognize(g);
  if (outcome.explainable) {
    result = "yes\n" + tree_text(*outcome.witness, o.dot);
    return kYes;
  }
  result = "no\ncertificate:" + vertex_list(g, outcome.certificate) + '\n';
  return kNo;
}

int cmd_canonicalize(const Options& o, std::string& result) {
  const auto t = parse_file(o.tree, parse_tree);
  result = tree_text(canonicalize(t), o.dot);
  return kYes;
}

template <class G>
std::string classes_comment(const G& g, const TwinPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += "# class " + std::to_string(i) + ':' + vertex_list(g, p.classes[i]) + '\n';
  return out;
}

int cmd_quotient(const Options& o, std::string& result) {
  if (o.oriented) {
    const OrientedGraph d = load_oriented_graph(o.graph);
    const auto p = false_twin_partition(d);
    const auto q = quotient(d, p);
    result = o.dot ? to_dot(q) : classes_comment(d, p) + format_oriented_graph(q);
  } else {
    const Graph g = load_graph(o.graph);
    const auto p = false_twin_partition(g);
    const auto q = quotient(g, p);
    result = o.dot ? to_dot(q) : classes_comment(g, p) + format_graph(q);
  }
  return kYes;
}

// Name pairs joined in `a` but not in `b`, one "u v" per entry.
template <class G>
std::vector<std::string> missing_pairs(const G& a, const G& b, bool directed) {
  std::set<std::pair<std::string, std::string>> in_b;
  auto pairs_of = [](const G& g) {
    if constexpr (std::is_same_v<G, OrientedGraph>) return g.arcs();
    else return g.edges();
  };
  auto key = [&](const std::string& u, const std::string& v) {
    return directed || name_less(u, v) ? std::pair{u, v} : std::pair{v, u};
  };
  for (const auto& [u, v] : pairs_of(b)) in_b.insert(key(b.name(u), b.name(v)));
  std::vector<std::string> out;
  for (const auto& [u, v] : pairs_of(a)) {
    const auto k = key(a.name(u), a.name(v));
    if (!in_b.count(k)) out.push_back(k.first + (directed ? " -> " : " ") + k.second);
  }
  return out;
}

template <class G>
std::string mismatch_report(const G& explained, const G& given, bool directed) {
  std::string out = "MISMATCH\n";
  for (const auto& pair : missing_pairs(given, explained, directed)) out += "missing: " + pair + "\n";
  for (const auto& pair : missing_pairs(explained, given, directed)) out += "extra: " + pair + "\n";
  return out;
}

int cmd_verify(const Options& o, std::string& result) {
  bool ok = false;
  if (o.rooted) {
    const auto t = parse_file(o.tree, parse_rooted_tree);
    const OrientedGraph d = load_oriented_graph(o.graph);
    ok = verify_oriented(t, d, o.k);
    result = ok ? "OK\n" : mismatch_report(directed_explain(t, o.k), d, true);
  } else {
    const auto t = parse_file(o.tree, parse_tree);
    const Graph g = load_graph(o.graph);
    ok = verify(t, g, o.k);
    result = ok ? "OK\n" : mismatch_report(explain(t, o.k), g, false);
  }
  return ok ? kYes : kNo;
}

int cmd_roots(const Options& o, std::string& result) {
  const auto t = parse_file(o.tree, parse_tree);
  if (!is_canonical(t)) throw InputError(o.tree + ": tree is not canonical; run canonicalize first");
  const auto rooted =
      enumerate_rooted(t, o.weight_at_leaf ? LeafRooting::weight_at_leaf : LeafRooting::zero_at_leaf);
  for (const auto& r : rooted) result += tree_text(r, o.dot);
  return kYes;
}

int cmd_oracle(const Options& o, std::string& result) {
  EnumerationBudget budget;
  budget.max_leaves = o.n;
  if (o.max_weight >= 0) budget.max_weight = o.max_weight;
  budget.canonical_only = o.canonical_only;
  budget.zero_discrete_only = o.zero_discrete;
  const auto report = check_characterization(budget, o.k, o.oriented);
  result = report.text();
  if (o.oriented && !report.has_oriented) result += "note: oriented comparison needs k=2 and n<=5\n";
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + o.out + "'");
    file << report.json();
  }
  return report.consistent() ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly-k relations of edge-weighted trees: explain, recognize, verify, enumerate.", "exact2"};
  app.require_subcommand(1);
  Options o;

  auto tree_arg = [&](CLI::App* sub) {
    sub->add_option("tree", o.tree, "tree file in Newick with integer weights ('-' reads stdin)")->required();
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph file: 'n m' then m lines 'u v' ('-' reads stdin)")->required();
  };
  auto k_opt = [&](CLI::App* sub) { sub->add_option("--k", o.k, "target path weight")->check(CLI::PositiveNumber); };
  auto dot_flag = [&](CLI::App* sub) { sub->add_flag("--dot", o.dot, "emit Graphviz DOT"); };
  auto out_opt = [&](CLI::App* sub, const char* what) { sub->add_option("--out", o.out, what); };

  auto* explain_cmd = app.add_subcommand("explain", "graph explained by a tree");
  tree_arg(explain_cmd);
  k_opt(explain_cmd);
  explain_cmd->add_flag("--rooted", o.rooted, "read the anchor as root and use the directed relation");
  dot_flag(explain_cmd);
  out_opt(explain_cmd, "write the result to this file");

  auto* recognize_cmd = app.add_subcommand("recognize", "decide explainability at k=2 (exit 0 yes, 1 no)");
  graph_arg(recognize_cmd);
  recognize_cmd->add_flag("--oriented", o.oriented, "read arcs and use the directed relation");
  dot_flag(recognize_cmd);
  out_opt(recognize_cmd, "write the result to this file");

  auto* canonicalize_cmd = app.add_subcommand("canonicalize", "suppress degree-2 vertices, contract inner 0-edges");
  tree_arg(canonicalize_cmd);
  dot_flag(canonicalize_cmd);
  out_opt(canonicalize_cmd, "write the result to this file");

  auto* quotient_cmd = app.add_subcommand("quotient", "false-twin classes and quotient graph");
  graph_arg(quotient_cmd);
  quotient_cmd->add_flag("--oriented", o.oriented, "read arcs; twins share in- and out-neighbours");
  dot_flag(quotient_cmd);
  out_opt(quotient_cmd, "write the result to this file");

  auto* verify_cmd = app.add_subcommand("verify", "check that a tree explains a graph (exit 0 OK, 1 mismatch)");
  tree_arg(verify_cmd);
  graph_arg(verify_cmd);
  k_opt(verify_cmd);
  verify_cmd->add_flag("--rooted", o.rooted, "rooted tree against an oriented graph");

  auto* roots_cmd = app.add_subcommand("roots", "all canonical rootings of a canonical tree");
  tree_arg(roots_cmd);
  roots_cmd->add_flag("--weight-at-leaf", o.weight_at_leaf,
                      "label leaf-edge roots as v -w- root -0- (yields non-canonical trees)");
  dot_flag(roots_cmd);
  out_opt(roots_cmd, "write the result to this file");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive comparison with the characterizations");
  oracle_cmd->add_option("--n", o.n, "largest leaf count (1-6)")->check(CLI::Range(1, 6));
  k_opt(oracle_cmd);
  oracle_cmd->add_option("--max-weight", o.max_weight, "largest edge weight (default k+1)")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_flag("--zero-discrete", o.zero_discrete, "only trees without leaves at distance 0");
  oracle_cmd->add_flag("--canonical-only,!--any-tree", o.canonical_only,
                       "only trees without interior 0-edges (default)");
  oracle_cmd->add_flag("--oriented", o.oriented, "also compare rooted trees (k=2, n<=5)");
  out_opt(oracle_cmd, "write a JSON summary to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    std::string result;
    int code = kYes;
    if (*explain_cmd) code = cmd_explain(o, result);
    else if (*recognize_cmd) code = cmd_recognize(o, result);
    else if (*canonicalize_cmd) code = cmd_canonicalize(o, result);
    else if (*quotient_cmd) code = cmd_quotient(o, result);
    else if (*verify_cmd) code = cmd_verify(o, result);
    else if (*roots_cmd) code = cmd_roots(o, result);
    else if (*oracle_cmd) code = cmd_oracle(o, result);

    if (!o.out.empty() && !*oracle_cmd) {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + o.out + "'");
      file << result;
    } else {
      out << result;
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace exact2::cli
