#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "exact2/newick.hpp"
#include "exact2/recognize.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace exact2;
using exact2::testing::Rng;

namespace {

Graph make(int n, std::vector<VertexPair> pairs) { return Graph::from_edge_list(n, pairs); }

Graph cycle(int n) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return make(n, pairs);
}

Graph path(int n) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return make(n, pairs);
}

bool clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (Vertex a : vs)
    for (Vertex b : vs)
      if (a != b && !g.adjacent(a, b)) return false;
  return true;
}

void check_yes(const Graph& g) {
  const RecognitionOutcome r = recognize(g);
  REQUIRE(r.explainable);
  REQUIRE(r.witness);
  CHECK(r.certificate.empty());
  CHECK(is_canonical(*r.witness));
  CHECK(verify(*r.witness, g, 2));
}

}  // namespace

TEST_CASE("cycles") {
  const RecognitionOutcome c5 = recognize(cycle(5));
  CHECK_FALSE(c5.explainable);
  CHECK_FALSE(c5.witness);
  CHECK(c5.certificate == std::vector<Vertex>{0, 1, 2, 3, 4});

  check_yes(cycle(4));
  const RecognitionOutcome c4 = recognize(cycle(4));
  // Both classes hang on 0-edges from the ends of one 2-edge.
  CHECK(tree_key(*c4.witness) == "(0:0,(1:0,3:0):2,2:0);");
  CHECK_FALSE(recognize(cycle(6)).explainable);
  check_yes(cycle(3));
}

TEST_CASE("small yes-instances") {
  check_yes(Graph(1));
  check_yes(Graph(4));
  check_yes(path(2));
  check_yes(path(4));
  check_yes(make(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));   // K4-e
  check_yes(make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));  // bowtie
  check_yes(make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));           // 2P3
  check_yes(make(4, {{0, 1}, {0, 2}, {0, 3}}));                   // claw
  CHECK_THROWS_AS(recognize(Graph(0)), std::invalid_argument);
}

TEST_CASE("the certificate is a non-clique block of the quotient") {
  // C5 on 0..4, vertex 5 a twin of 0, and a pendant 6 on 2.
  const Graph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}, {2, 6}});
  const RecognitionOutcome r = recognize(g);
  CHECK_FALSE(r.explainable);
  const TwinPartition p = false_twin_partition(g);
  const Graph q = quotient(g, p);
  std::vector<Vertex> in_quotient;
  for (Vertex v : r.certificate) in_quotient.push_back(p.class_of[v]);
  std::sort(in_quotient.begin(), in_quotient.end());
  const auto blocks = block_decomposition(q).blocks;
  CHECK(in_quotient.size() == 5);
  CHECK(std::find(blocks.begin(), blocks.end(), in_quotient) != blocks.end());
  CHECK_FALSE(clique(q, in_quotient));
}

TEST_CASE("block trees") {
  const LabeledTree k2 = construct_block_tree(path(2));
  CHECK(to_newick(k2) == "(1:2)0;");

  const LabeledTree bowtie = construct_block_tree(make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(tree_key(bowtie) == "(0:1,1:1,(2:0,(3:1,4:1):1):1);");

  CHECK_THROWS_AS(construct_block_tree(Graph(1)), std::invalid_argument);
  CHECK_THROWS_AS(construct_block_tree(make(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(construct_block_tree(cycle(4)), std::invalid_argument);

  Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    const Graph g = testing::random_block_graph(rng, testing::uniform(rng, 2, 10));
    if (connected_components(g).size() != 1) continue;
    const LabeledTree t = construct_block_tree(g);
    CHECK(is_canonical(t));
    CHECK(is_zero_discrete(t));
    CHECK(verify(t, g, 2));
  }
}

TEST_CASE("blowing up false twin classes") {
  // Quotient P4 = 0-1-2-3 where 4 is a twin of 0 and 5 a twin of 3.
  const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {4, 1}, {5, 2}});
  const TwinPartition p = false_twin_partition(g);
  const Graph q = quotient(g, p);
  LabeledTree qt = construct_block_tree(q);
  const LabeledTree t = blow_up(qt, p, g.names(), 2);
  CHECK(verify(t, g, 2));

  // Discrete partitions leave the tree alone.
  const Graph p4 = path(4);
  const LabeledTree p4_tree = construct_block_tree(p4);
  CHECK(tree_key(blow_up(p4_tree, false_twin_partition(p4), p4.names(), 2)) == tree_key(p4_tree));

  // A representative that is missing from the tree is rejected.
  const LabeledTree wrong = parse_tree("(x:1,y:1,z:1)c;");
  CHECK_THROWS_AS(blow_up(wrong, p, g.names(), 2), std::invalid_argument);
}

TEST_CASE("joining components") {
  const LabeledTree single = parse_tree("(a:1,b:1,c:1)r;");
  CHECK(tree_key(join_components(std::vector<LabeledTree>{single}, 2)) == tree_key(single));

  // Three isolated vertices: all pairwise distances exceed 2.
  const std::vector<LabeledTree> points{parse_tree("a;"), parse_tree("b;"), parse_tree("c;")};
  const LabeledTree joined = join_components(points, 2);
  const DistanceMatrix m = leaf_distance_matrix(joined);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(m(i, j) > 2);
  CHECK(explain(joined, 2).edge_count() == 0);

  // Two P3 components.
  const std::vector<LabeledTree> p3s{construct_block_tree(path(3)),
                                     construct_block_tree(path(3).with_names({"3", "4", "5"}))};
  CHECK(verify(join_components(p3s, 2), make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), 2));

  // K2 components are split at a midpoint.
  const std::vector<LabeledTree> edges{parse_tree("(b:2)a;"), parse_tree("(d:2)c;")};
  CHECK(verify(join_components(edges, 2), make(4, {{0, 1}, {2, 3}}).with_names({"a", "b", "c", "d"}), 2));
  CHECK_THROWS_AS(join_components(std::vector<LabeledTree>{}, 2), std::invalid_argument);
}

TEST_CASE("verify") {
  const LabeledTree s4 = parse_tree("(0:1,1:1,2:1,3:1)c;");
  const Graph k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(verify(s4, k4, 2));
  CHECK_FALSE(verify(s4, cycle(4), 2));
  CHECK(verify(parse_tree("((0:2,1:0)p:2,2:0,3:2)q;"), path(4), 2));
  CHECK_THROWS_WITH_AS(verify(s4, Graph(3), 2), doctest::Contains("3"), std::invalid_argument);
}

TEST_CASE("only k = 2 is supported") {
  CHECK_THROWS_AS(recognize(path(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(recognize(path(3), 3), std::invalid_argument);
}

TEST_CASE("random graphs agree with the quotient criterion") {
  Rng rng(43);
  int yes = 0;
  for (int round = 0; round < 600; ++round) {
    const int n = testing::uniform(rng, 1, 9);
    Graph g;
    switch (round % 3) {
      case 0: g = testing::random_graph(rng, n, 0.3); break;
      case 1: g = testing::random_explainable_graph(rng, n); break;
      default: g = testing::add_false_twins(rng, testing::random_graph(rng, n, 0.4), 2); break;
    }
    const Graph q = testing::naive_quotient(g);
    bool expected = true;
    for (const auto& comp : connected_components(q))
      expected = expected && testing::naive_is_block_graph(induced_subgraph(q, comp));
    const RecognitionOutcome r = recognize(g);
    CHECK(r.explainable == expected);
    if (r.explainable) {
      ++yes;
      CHECK(verify(*r.witness, g, 2));
      CHECK(is_canonical(*r.witness));
    } else {
      CHECK(r.certificate.size() >= 4);
    }
  }
  CHECK(yes > 200);
}

TEST_CASE("contracting interior 0-edges keeps the graph, other edges change it") {
  // An uncontracted witness of the claw with a 0-edge between two hubs.
  const LabeledTree split = parse_tree("((1:2,2:2)p:0,3:2,0:0)q;");
  const Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
  REQUIRE(verify(split, claw, 2));
  for (int e = 0; e < split.edge_count(); ++e)
    if (split.is_interior_edge(e)) CHECK(verify(contract_edge(split, e), claw, 2));

  Rng rng(47);
  for (int round = 0; round < 100; ++round) {
    const Graph g = testing::random_explainable_graph(rng, 7);
    if (connected_components(g).size() != 1 || g.order() < 3) continue;
    const LabeledTree t = *recognize(g).witness;
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!t.is_interior_edge(e)) continue;
      CHECK(t.edge(e).weight > 0);
      CHECK_FALSE(explain(contract_edge(t, e), 2) == g);
    }
  }
}
