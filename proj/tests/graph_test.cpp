#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pirank/error.hpp"
#include "pirank/graph.hpp"

using namespace pirank;

namespace {

LabeledGraph random_connected(std::mt19937& rng, int vertices, int extra, int rank) {
  std::uniform_int_distribution<int> label(1, rank);
  LabeledGraph g(vertices);
  for (int v = 1; v < vertices; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (rng() % 2) {
      g.add_edge(u, v, label(rng));
    } else {
      g.add_edge(v, u, label(rng));
    }
  }
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  for (int i = 0; i < extra; ++i) g.add_edge(vertex(rng), vertex(rng), label(rng));
  g.set_base(0);
  return g;
}

}  // namespace

TEST(Graph, FoldMatchesRepeatedScan) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledGraph g = random_connected(rng, 1 + trial % 7, trial % 6, 2);
    const Folding f = fold(g);
    const LabeledGraph naive = oracle::naive_fold(g);
    ASSERT_TRUE(f.folded.is_immersed());
    ASSERT_TRUE(is_morphism(g, f.folded, f.quotient));
    EXPECT_EQ(f.folded.num_vertices(), naive.num_vertices());
    EXPECT_EQ(f.folded.num_edges(), naive.num_edges());
    EXPECT_EQ(canonical_form(f.folded), canonical_form(naive)) << to_text(g);
  }
}

TEST(Graph, WordCycleFoldsToItself) {
  const Word w = parse_word("abAB");
  const LabeledGraph c = word_to_cycle(w, Alphabet(2));
  EXPECT_EQ(c.num_vertices(), 4);
  EXPECT_TRUE(c.is_immersed());
  EXPECT_EQ(fold(c).folded.num_edges(), 4);
  EXPECT_THROW(word_to_cycle(parse_word("abA"), Alphabet(2)), Error);
}

TEST(Graph, FoldOfPowerIsRootCycle) {
  const LabeledGraph c = word_to_cycle(parse_word("abab"), Alphabet(2));
  // Folding alone never identifies the two halves of a proper power.
  EXPECT_EQ(fold(c).folded.num_edges(), 4);
  LabeledGraph bent = c;
  bent.add_edge(0, 2, 1);
  EXPECT_EQ(fold(bent).folded.num_edges(), 4);
  EXPECT_EQ(fold(bent).folded.num_vertices(), 3);
}

TEST(Graph, FiberProductOfCyclesIntersects) {
  const LabeledGraph a = word_to_cycle(parse_word("aa"), Alphabet(2));
  const LabeledGraph b = word_to_cycle(parse_word("aaa"), Alphabet(2));
  const FiberProduct p = fiber_product(a, b);
  EXPECT_EQ(p.graph.num_vertices(), 6);
  EXPECT_EQ(p.graph.num_edges(), 6);
  EXPECT_EQ(betti_euler(p.graph).components, 1);
}

TEST(Graph, CoreKeepsBaseAndCycles) {
  LabeledGraph g(4);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 1, 2);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 2);
  g.set_base(0);
  const Subgraph c = core(g);
  EXPECT_EQ(c.graph.num_vertices(), 2);
  EXPECT_EQ(c.graph.num_edges(), 2);
}

TEST(Graph, BettiNumbers) {
  EXPECT_EQ(betti_euler(rose(3)), (BettiEuler{1, 3, -2}));
  EXPECT_EQ(betti_euler(LabeledGraph(3)), (BettiEuler{3, 0, 3}));
}

TEST(Graph, SpanningTreeBasisReadsLoops) {
  const LabeledGraph c = word_to_cycle(parse_word("abAB"), Alphabet(2));
  const Basis basis = spanning_tree_basis(c);
  ASSERT_EQ(basis.rank(), 1);
  EXPECT_EQ(cyclic_normal_form(basis.generator_words[0]), cyclic_normal_form(parse_word("abAB")));
  const Lift lift = express_in_basis(c, parse_word("abABabAB"));
  EXPECT_EQ(lift.status, LiftStatus::closed);
  EXPECT_EQ(lift.in_basis.size(), 2u);
}

TEST(Graph, FactorsThrough) {
  LabeledGraph small = word_to_cycle(parse_word("ab"), Alphabet(2));
  small.set_base(0);
  const LabeledGraph big = rose(2);
  EXPECT_TRUE(factors_through(small, big));
  EXPECT_FALSE(factors_through(big, small));
}

TEST(Graph, TextRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledGraph g = random_connected(rng, 1 + trial % 5, trial % 4, 3);
    EXPECT_EQ(parse_graph(to_text(g)), g);
  }
  EXPECT_THROW(parse_graph("v 0\ne 0 0 1 a\n"), Error);
  EXPECT_THROW(parse_graph("v 0\nv 0\n"), Error);
  EXPECT_THROW(parse_graph("v 0\ne 0 0 0 7\n"), Error);
  EXPECT_THROW(parse_graph("vertex 0\n"), Error);
}

TEST(Graph, TextIdsNeedNotBeDense) {
  const LabeledGraph g = parse_graph("# comment\nv 10\nv 20\ne 5 10 20 b\nbase 20\n");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.edge(0).label, 2);
  EXPECT_EQ(g.base(), 1);
}
