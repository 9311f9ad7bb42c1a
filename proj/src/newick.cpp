#include "exact2/newick.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "exact2/error.hpp"

namespace exact2 {

namespace {

bool is_name_char(char c) {
  switch (c) {
    case '(': case ')': case ',': case ':': case ';': case '[': case ']': case '\'':
      return false;
    default:
      return !std::isspace(static_cast<unsigned char>(c));
  }
}

struct Node {
  std::string name;
  std::optional<Weight> weight;
  std::vector<int> children;
  std::size_t position;
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  std::vector<Node> parse() {
    parse_node();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after ';'");
    return std::move(nodes_);
  }

  [[noreturn]] void fail_at(std::size_t position, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < position && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int parse_node() {
    skip_space();
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({{}, std::nullopt, {}, pos_});
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        const int child = parse_node();
        nodes_[id].children.push_back(child);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    skip_space();
    const std::size_t name_start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    nodes_[id].name = std::string(text_.substr(name_start, pos_ - name_start));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_space();
      nodes_[id].weight = parse_weight();
    }
    return id;
  }

  Weight parse_weight() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative weight");
    if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
    Weight value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Weight>::max() - digit) / 10) fail_at(start, "weight overflow");
      value = value * 10 + digit;
      any = true;
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail_at(start, "non-integer weight");
    if (!any) fail_at(start, "expected integer weight");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

struct Parsed {
  LabeledTree tree;
  int anchor = 0;
};

Parsed build(std::string_view text, bool rooted) {
  NewickParser parser(text);
  const auto nodes = parser.parse();
  const Node& anchor = nodes.front();
  if (anchor.weight) parser.fail_at(anchor.position, "the anchor has no parent edge and takes no weight");

  Parsed out;
  std::unordered_set<std::string> leaf_names;
  std::vector<int> vertex(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& node = nodes[i];
    const bool leaf = node.children.empty() ||
                      (i == 0 && !rooted && node.children.size() == 1 && !node.name.empty());
    if (leaf) {
      if (node.name.empty()) parser.fail_at(node.position, "leaf without a name");
      if (!leaf_names.insert(node.name).second)
        parser.fail_at(node.position, "duplicate leaf name '" + node.name + "'");
      vertex[i] = out.tree.add_leaf(node.name);
    } else {
      vertex[i] = out.tree.add_interior(node.name);
    }
    if (i > 0 && !node.weight) parser.fail_at(node.position, "missing weight");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int child : nodes[i].children) out.tree.add_edge(vertex[i], vertex[child], *nodes[child].weight);
  return out;
}

class NewickWriter {
 public:
  NewickWriter(const LabeledTree& t, NewickOptions options) : t_(t), options_(options) {
    min_leaf_.resize(t.vertex_count());
  }

  std::string write(int anchor) {
    std::ostringstream out;
    compute_keys(anchor, -1);
    emit(out, anchor, -1, -1);
    out << ';';
    return out.str();
  }

 private:
  // Smallest leaf name in each subtree hanging below `v` (seen from `parent`).
  const std::string& compute_keys(int v, int parent) {
    std::string& best = min_leaf_[v];
    best = t_.is_leaf(v) ? t_.name(v) : std::string();
    for (int e : t_.incident_edges(v)) {
      const int w = t_.opposite(e, v);
      if (w == parent) continue;
      const std::string& key = compute_keys(w, v);
      if (!key.empty() && (best.empty() || name_less(key, best))) best = key;
    }
    return best;
  }

  void emit(std::ostringstream& out, int v, int parent, int parent_edge) {
    std::vector<std::pair<int, int>> children;  // (vertex, edge)
    for (int e : t_.incident_edges(v)) {
      const int w = t_.opposite(e, v);
      if (w != parent) children.emplace_back(w, e);
    }
    std::sort(children.begin(), children.end(), [&](const auto& a, const auto& b) {
      const auto& ka = min_leaf_[a.first];
      const auto& kb = min_leaf_[b.first];
      if (ka.empty() != kb.empty()) return kb.empty();
      if (ka != kb) return name_less(ka, kb);
      return t_.edge(a.second).weight < t_.edge(b.second).weight;
    });
    if (!children.empty()) {
      out << '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out << ',';
        emit(out, children[i].first, v, children[i].second);
      }
      out << ')';
    }
    const bool write_name = t_.is_leaf(v) || options_.interior_names;
    const std::string& name = t_.name(v);
    if (write_name && !name.empty()) {
      if (!std::all_of(name.begin(), name.end(), is_name_char))
        throw std::invalid_argument("name '" + name + "' cannot be written as Newick");
      out << name;
    } else if (children.empty()) {
      throw std::invalid_argument("unlabeled childless vertex cannot be written as Newick");
    }
    if (parent_edge >= 0) out << ':' << t_.edge(parent_edge).weight;
  }

  const LabeledTree& t_;
  NewickOptions options_;
  std::vector<std::string> min_leaf_;
};

int unrooted_anchor(const LabeledTree& t) {
  const auto leaves = t.leaves();
  if (leaves.empty()) return 0;
  const int first = leaves.front();
  for (int e : t.incident_edges(first)) {
    const int w = t.opposite(e, first);
    if (!t.is_leaf(w)) return w;
  }
  return first;
}

std::string dot_label(const LabeledTree& t, int v) {
  if (t.is_leaf(v)) return "[label=\"" + t.name(v) + "\"]";
  if (!t.name(v).empty()) return "[label=\"" + t.name(v) + "\", shape=box]";
  return "[label=\"\", shape=point]";
}

std::string dot_edge_style(Weight w) {
  return w == 0 ? "[style=dashed]" : "[label=\"" + std::to_string(w) + "\"]";
}

}  // namespace

LabeledTree parse_tree(std::string_view text) { return build(text, false).tree; }

RootedLabeledTree parse_rooted_tree(std::string_view text) {
  auto parsed = build(text, true);
  return {std::move(parsed.tree), parsed.anchor};
}

std::string to_newick(const LabeledTree& t, NewickOptions options) {
  return NewickWriter(t, options).write(unrooted_anchor(t));
}

std::string to_newick(const RootedLabeledTree& t, NewickOptions options) {
  return NewickWriter(t.tree, options).write(t.root);
}

std::string to_dot(const LabeledTree& t) {
  std::ostringstream out;
  out << "graph T {\n";
  for (int v = 0; v < t.vertex_count(); ++v) out << "  " << v << ' ' << dot_label(t, v) << ";\n";
  for (const auto& e : t.edges())
    out << "  " << e.u << " -- " << e.v << ' ' << dot_edge_style(e.weight) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const RootedLabeledTree& t) {
  std::vector<int> parent;
  std::vector<Weight> up;
  t.parents(parent, up);
  std::ostringstream out;
  out << "digraph T {\n";
  for (int v = 0; v < t.tree.vertex_count(); ++v) {
    out << "  " << v << ' ' << dot_label(t.tree, v);
    if (v == t.root) out << " [peripheries=2]";
    out << ";\n";
  }
  for (int v = 0; v < t.tree.vertex_count(); ++v)
    if (parent[v] >= 0) out << "  " << parent[v] << " -> " << v << ' ' << dot_edge_style(up[v]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace exact2
