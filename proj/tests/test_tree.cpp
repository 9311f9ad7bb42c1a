#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "exact2/newick.hpp"
#include "exact2/tree.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace exact2;
using exact2::testing::Rng;

namespace {

// x,y hang off p with 2 and 0; u,z hang off q with 2 and 0; p-q has weight 2.
LabeledTree p4_caterpillar() { return parse_tree("((x:2,y:0)p:2,u:2,z:0)q;"); }

LabeledTree star(int n, Weight w) {
  LabeledTree t;
  const int c = t.add_interior();
  for (int i = 0; i < n; ++i) t.add_edge(c, t.add_leaf(std::to_string(i)), w);
  return t;
}

}  // namespace

TEST_CASE("building and validating trees") {
  LabeledTree t;
  const int a = t.add_leaf("a");
  const int c = t.add_interior("c");
  const int b = t.add_leaf("b");
  t.add_edge(a, c, 1);
  const int e = t.add_edge(c, b, 3);
  t.validate();
  CHECK(t.opposite(e, c) == b);
  CHECK(t.edge_between(a, c) == 0);
  CHECK(t.edge_between(a, b) == -1);
  CHECK_FALSE(t.is_interior_edge(e));
  CHECK(t.leaf_names() == std::vector<std::string>{"a", "b"});
  CHECK(t.find_leaf("b") == b);
  CHECK(t.find_leaf("c") == -1);
  CHECK_THROWS_AS(t.add_edge(a, b, -1), std::invalid_argument);

  LabeledTree bad;
  bad.add_leaf("a");
  bad.add_leaf("a");
  bad.add_edge(0, 1, 0);
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("duplicate"), std::invalid_argument);

  LabeledTree split;
  split.add_leaf("a");
  split.add_leaf("b");
  CHECK_THROWS_AS(split.validate(), std::invalid_argument);
}

TEST_CASE("distance matrix and exactly-k graphs") {
  const LabeledTree t = p4_caterpillar();
  const DistanceMatrix m = leaf_distance_matrix(t);
  CHECK(m.names == std::vector<std::string>{"u", "x", "y", "z"});
  CHECK(m(1, 2) == 2);  // x-y
  CHECK(m(1, 0) == 6);  // x-u
  CHECK(m(2, 3) == 2);  // y-z
  CHECK(m(2, 0) == 4);  // y-u

  const Graph g = explain(t, 2);
  // P4 x - y - z - u.
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(g.find("x"), g.find("y")));
  CHECK(g.adjacent(g.find("y"), g.find("z")));
  CHECK(g.adjacent(g.find("z"), g.find("u")));

  CHECK(explain(star(4, 1), 2).edge_count() == 6);
  CHECK(explain(star(4, 1), 7).edge_count() == 0);
}

TEST_CASE("explain agrees with all-pairs shortest paths") {
  Rng rng(17);
  for (int round = 0; round < 300; ++round) {
    const LabeledTree t = testing::random_tree(rng, testing::uniform(rng, 1, 8), 3);
    const Weight k = testing::uniform(rng, 1, 4);
    CHECK(explain(t, k) == testing::naive_explain(t, k));
  }
}

TEST_CASE("scaling multiplies the relation's threshold") {
  Rng rng(2);
  for (int round = 0; round < 100; ++round) {
    const LabeledTree t = testing::random_tree(rng, testing::uniform(rng, 2, 7), 3);
    const Weight c = testing::uniform(rng, 1, 3);
    CHECK(explain(scale(t, c), 2 * c) == explain(t, 2));
  }
  CHECK_THROWS_AS(scale(star(3, 1), 0), std::invalid_argument);
}

TEST_CASE("canonicalize suppresses and contracts") {
  // a -1- s -1- m -0- n with b and c on m and n respectively; s has degree 2.
  LabeledTree t;
  const int a = t.add_leaf("a");
  const int b = t.add_leaf("b");
  const int c = t.add_leaf("c");
  const int d = t.add_leaf("d");
  const int s = t.add_interior();
  const int m = t.add_interior();
  const int n = t.add_interior();
  t.add_edge(a, s, 1);
  t.add_edge(s, m, 1);
  t.add_edge(m, b, 1);
  t.add_edge(m, n, 0);
  t.add_edge(n, c, 1);
  t.add_edge(n, d, 0);
  CHECK_FALSE(is_canonical(t));
  const LabeledTree canon = canonicalize(t);
  CHECK(is_canonical(canon));
  CHECK(canon.vertex_count() == 5);
  CHECK(canon.edge_count() == 4);
  const int leaf_a = canon.find_leaf("a");
  CHECK(canon.edge(canon.incident_edges(leaf_a).front()).weight == 2);
  CHECK(leaf_distance_matrix(canon).entries == leaf_distance_matrix(t).entries);

  // A dangling unlabeled vertex disappears.
  LabeledTree dangling = star(3, 1);
  dangling.add_edge(0, dangling.add_interior(), 5);
  CHECK(canonicalize(dangling).vertex_count() == 4);
}

TEST_CASE("canonicalize preserves distances, is idempotent, and canonical") {
  Rng rng(23);
  for (int round = 0; round < 300; ++round) {
    const LabeledTree t = testing::random_tree(rng, testing::uniform(rng, 1, 8), 3);
    const LabeledTree c = canonicalize(t);
    c.validate();
    CHECK(is_canonical(c));
    CHECK(leaf_distance_matrix(c).entries == leaf_distance_matrix(t).entries);
    CHECK(tree_key(canonicalize(c)) == tree_key(c));
  }
}

TEST_CASE("restriction matches removing leaves one at a time") {
  Rng rng(29);
  for (int round = 0; round < 200; ++round) {
    const int n = testing::uniform(rng, 2, 8);
    const LabeledTree t = testing::random_canonical_tree(rng, n, 3);
    std::vector<std::string> names = t.leaf_names();
    std::shuffle(names.begin(), names.end(), rng);
    const int keep = testing::uniform(rng, 1, n);
    std::vector<std::string> kept(names.begin(), names.begin() + keep);

    const LabeledTree direct = restrict_leaves(t, kept);
    LabeledTree stepwise = t;
    for (int i = keep; i < n; ++i) {
      std::vector<std::string> rest = stepwise.leaf_names();
      rest.erase(std::find(rest.begin(), rest.end(), names[i]));
      stepwise = restrict_leaves(stepwise, rest);
    }
    CHECK(tree_key(direct) == tree_key(stepwise));

    // The restricted tree keeps the distances between the kept leaves.
    const DistanceMatrix full = leaf_distance_matrix(t);
    const DistanceMatrix part = leaf_distance_matrix(direct);
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = 0; j < part.size(); ++j) {
        const auto fi = std::find(full.names.begin(), full.names.end(), part.names[i]) - full.names.begin();
        const auto fj = std::find(full.names.begin(), full.names.end(), part.names[j]) - full.names.begin();
        CHECK(part(i, j) == full(fi, fj));
      }
  }
  const std::vector<std::string> none;
  CHECK_THROWS_AS(restrict_leaves(star(3, 1), none), std::invalid_argument);
  const std::vector<std::string> unknown{"9"};
  CHECK_THROWS_AS(restrict_leaves(star(3, 1), unknown), std::invalid_argument);
}

TEST_CASE("zero discreteness") {
  CHECK(is_zero_discrete(p4_caterpillar()));
  CHECK_FALSE(is_zero_discrete(parse_tree("(a:0,b:0,c:1)r;")));
  CHECK(is_zero_discrete(parse_tree("(a:0,b:1,c:1)r;")));
}

TEST_CASE("contracting edges") {
  const LabeledTree t = parse_tree("((a:1,b:1)p:0,c:1,d:1)q;");
  int inner = -1;
  for (int e = 0; e < t.edge_count(); ++e)
    if (t.is_interior_edge(e)) inner = e;
  REQUIRE(inner >= 0);
  const LabeledTree merged = contract_edge(t, inner);
  CHECK(merged.vertex_count() == 5);
  CHECK(explain(merged, 2) == explain(t, 2));
  CHECK(is_canonical(merged));
  CHECK_THROWS_AS(contract_edge(t, t.incident_edges(t.find_leaf("a")).front()), std::invalid_argument);
}
