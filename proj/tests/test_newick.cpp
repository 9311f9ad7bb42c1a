#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact2/error.hpp"
#include "exact2/newick.hpp"
#include "support/generators.hpp"

using namespace exact2;

TEST_CASE("parsing the format example") {
  const LabeledTree t = parse_tree("((a:2,b:0)p:2,(c:0,d:2)q:0)r;");
  t.validate();
  CHECK(t.leaf_names() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(t.vertex_count() == 7);
  const auto m = leaf_distance_matrix(t);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 4);
  CHECK(m(1, 3) == 4);
  CHECK(m(2, 3) == 2);
}

TEST_CASE("two-leaf and one-leaf trees") {
  const LabeledTree pair = parse_tree("(b:2)a;");
  CHECK(pair.vertex_count() == 2);
  CHECK(pair.leaf_count() == 2);
  CHECK(to_newick(pair) == "(b:2)a;");
  const LabeledTree single = parse_tree("a;");
  CHECK(single.leaf_count() == 1);
  CHECK(to_newick(single) == "a;");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:-1)r;"), doctest::Contains("negative"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:1.5)r;"), doctest::Contains("non-integer"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b)r;"), doctest::Contains("missing weight"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,:1)r;"), doctest::Contains("without a name"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,a:1)r;"), doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:1)r"), doctest::Contains("';'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:1)r; x"), doctest::Contains("after"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:1)r:3;"), doctest::Contains("anchor"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(a:1,b:99999999999999999999)r;"), doctest::Contains("overflow"), ParseError);
  try {
    parse_tree("(a:1,\n b:x)r;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("rooted reading keeps the anchor as root") {
  const RootedLabeledTree r = parse_rooted_tree("((a:0,b:2)p:1,c:0)r;");
  CHECK(r.tree.name(r.root) == "r");
  CHECK_FALSE(r.tree.is_leaf(r.root));
  std::vector<int> parent;
  std::vector<Weight> up;
  r.parents(parent, up);
  const int b = r.tree.find_leaf("b");
  CHECK(up[b] == 2);
  CHECK(r.tree.name(parent[b]) == "p");
  CHECK(to_newick(r) == "((a:0,b:2)p:1,c:0)r;");

  // In the rooted reading a named anchor with one child is an interior root.
  const RootedLabeledTree single_child = parse_rooted_tree("(a:0)r;");
  CHECK_FALSE(single_child.tree.is_leaf(single_child.root));
  CHECK(parse_tree("(a:0)r;").leaf_count() == 2);
}

TEST_CASE("output is independent of input order") {
  const LabeledTree a = parse_tree("((d:1,c:2)q:1,(b:0,a:1)p:3)r;");
  const LabeledTree b = parse_tree("((a:1,b:0)p:3,(c:2,d:1)q:1)r;");
  CHECK(to_newick(a) == to_newick(b));
  CHECK(tree_key(a) == "(a:1,b:0,((c:2,d:1):1):3);");
}

TEST_CASE("round trip of random trees") {
  testing::Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const LabeledTree t = round % 2 ? testing::random_canonical_tree(rng, testing::uniform(rng, 1, 9), 4)
                                    : canonicalize(testing::random_tree(rng, testing::uniform(rng, 1, 9), 4));
    const std::string text = to_newick(t);
    const LabeledTree back = parse_tree(text);
    CHECK(to_newick(back) == text);
    CHECK(leaf_distance_matrix(back).entries == leaf_distance_matrix(t).entries);

    RootedLabeledTree r{t, testing::uniform(rng, 0, t.vertex_count() - 1)};
    if (r.tree.is_leaf(r.root) && r.tree.vertex_count() > 1) continue;
    const std::string rooted_text = to_newick(r);
    CHECK(to_newick(parse_rooted_tree(rooted_text)) == rooted_text);
  }
}

TEST_CASE("dot output marks zero edges") {
  const LabeledTree t = parse_tree("(a:0,b:2,c:1)r;");
  const std::string dot = to_dot(t);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
  const std::string rooted = to_dot(parse_rooted_tree("(a:0,b:2)r;"));
  CHECK(rooted.find("->") != std::string::npos);
  CHECK(rooted.find("peripheries=2") != std::string::npos);
}
