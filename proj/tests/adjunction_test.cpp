#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fuzz.hpp"
#include "pirank/adjunction.hpp"
#include "pirank/error.hpp"

using namespace pirank;

namespace {

// C vertices c1..c6 over U vertices u1..u6; 18 edges, b1 = 7.
BipartiteGraph filtration_figure() {
  BipartiteGraph b;
  b.c_count = 6;
  b.u_count = 6;
  const std::vector<std::vector<int>> stars{{0, 1}, {2, 3}, {0, 1, 2, 3}, {4, 0, 1, 2}, {0, 3}, {5, 0, 1, 2}};
  for (int c = 0; c < 6; ++c) {
    for (int u : stars[c]) b.edges.push_back({c, u});
  }
  return b;
}

AdjunctionInstance copies_of_circle(const Word& w, int copies) {
  const fuzz::Circles c = fuzz::covering_circles(w, 2, std::vector<int>(copies, 1));
  std::vector<int> classes(c.p.num_vertices());
  for (int v = 0; v < c.p.num_vertices(); ++v) classes[v] = v;
  const auto q = fuzz::quotient(c, classes, [](int, const std::vector<int>&) { return -1; });
  return fuzz::circle_instance(w, 2, c, q);
}

BettiEuler homology(const BipartiteGraph& b) {
  std::vector<std::pair<int, int>> edges;
  for (auto [c, u] : b.edges) edges.push_back({c, b.c_count + u});
  return betti_euler(b.c_count + b.u_count, edges);
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Adjunction, BorromeanRingsAreTight) {
  const AdjunctionInstance inst = borromean_instance();
  const ResolvedSpace space = build(inst);
  EXPECT_EQ(space.chi_gamma, -3);
  EXPECT_EQ(space.chi_gamma_u, -1);
  EXPECT_EQ(space.chi_w, -3);
  EXPECT_EQ(space.chi_c, 2);
  EXPECT_TRUE(space.boundary.empty());
  const DependenceTheoremReport r = verify_dependence_theorem(inst);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_FALSE(r.dependence.independent);
  EXPECT_TRUE(r.inequality_asserted);
  EXPECT_EQ(r.lhs(), -1);
  EXPECT_EQ(r.chi_gamma_u, -1);
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(r.free_rank, 2);
  EXPECT_FALSE(r.violated());
}

TEST(Adjunction, ParsedFileMatchesBuiltInstance) {
  const AdjunctionInstance inst = parse_instance(read(PIRANK_DATA_DIR "/borromean.inst"));
  const AdjunctionInstance built = borromean_instance();
  EXPECT_EQ(inst.gamma, built.gamma);
  EXPECT_EQ(inst.lambda, built.lambda);
  EXPECT_EQ(inst.h, built.h);
  EXPECT_EQ(parse_instance(to_text(built)).sigma, built.sigma);
}

TEST(Adjunction, ParseErrors) {
  EXPECT_THROW(parse_instance("graph omega\nv 0\n"), Error);
  const std::string text = to_text(borromean_instance());
  const std::string broken = text.substr(0, text.rfind("map sigma"));
  EXPECT_THROW(parse_instance(broken), Error);
  std::string bad = text;
  const std::size_t at = bad.find("map lambda e0 -> ");
  ASSERT_NE(at, std::string::npos);
  bad.replace(at, bad.find('\n', at) - at, "map lambda e0 -> e3");
  EXPECT_THROW(parse_instance(bad), Error);
}

TEST(Adjunction, OneCopyIsWeaklyDependentAndTight) {
  const DependenceTheoremReport r = verify_dependence_theorem(copies_of_circle(parse_word("aab"), 1));
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.dependence.independent);
  EXPECT_TRUE(r.dependence.weakly_dependent());
  EXPECT_EQ(r.lhs(), r.chi_gamma_u);
}

TEST(Adjunction, TwoCopiesAreStronglyIndependent) {
  const DependenceTheoremReport r = verify_dependence_theorem(copies_of_circle(parse_word("aab"), 2));
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.dependence.strongly_independent);
  EXPECT_FALSE(r.inequality_asserted);
}

TEST(Adjunction, RepeatedPairBreaksIrreducibility) {
  const Word w = parse_word("ab");
  const fuzz::Circles c = fuzz::covering_circles(w, 2, {1, 1});
  std::vector<int> classes(c.p.num_vertices());
  for (int v = 0; v < c.p.num_vertices(); ++v) classes[v] = c.vertex_position[v];
  const auto q = fuzz::quotient(c, classes, [](int, const std::vector<int>& cand) { return cand.empty() ? -1 : cand[0]; });
  const DiReport di = check_diagrammatic_irreducibility(fuzz::circle_instance(w, 2, c, q));
  EXPECT_FALSE(di.rho_injective);
  EXPECT_FALSE(di.witness.empty());
}

TEST(Adjunction, FigureIncrements) {
  const BipartiteGraph b = filtration_figure();
  EXPECT_EQ(homology(b).b1, 7);
  EXPECT_EQ(homology(b).chi, -6);
  const std::vector<int> order{0, 1, 2, 3, 4, 5};
  const UpDownResult r = updown_check(b, order);
  EXPECT_EQ(r.increments.up, (std::vector<int>{0, 0, 2, 2, 1, 2}));
  int down = 0;
  for (int d : r.increments.down) down += d;
  EXPECT_EQ(down, 7);
  EXPECT_GE(r.good_c.size() + r.good_u.size(), 2u);
}

TEST(Adjunction, UpDownPreconditions) {
  BipartiteGraph point;
  point.c_count = 1;
  EXPECT_THROW(updown_check(point, std::vector<int>{0}), Error);
  BipartiteGraph doubled;
  doubled.c_count = 1;
  doubled.u_count = 1;
  doubled.edges = {{0, 0}, {0, 0}};
  EXPECT_THROW(updown_check(doubled, std::vector<int>{0}), Error);
}

TEST(Adjunction, UpDownOnRandomGraphs) {
  for (int t = 0; t < 200; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(5, t);
    const BipartiteGraph b = fuzz::random_bipartite(rng, 8);
    const auto order = fuzz::random_order(rng, b.c_count);
    const UpDownResult r = updown_check(b, order);
    int up = 0;
    for (int d : r.increments.up) up += d;
    EXPECT_EQ(up, homology(b).b1);
  }
}

TEST(Adjunction, FuzzedInstancesSatisfyTheInequality) {
  const fuzz::FuzzSummary s = fuzz::run_fuzz("dependence", 9, 100);
  EXPECT_EQ(s.checked, 100);
  EXPECT_EQ(s.violations, 0) << s.first_violation;
}

TEST(Adjunction, MissingStackingIsAPreconditionError) {
  const AdjunctionInstance inst = borromean_instance();
  Stacking bogus;
  try {
    filtration(inst, build(inst), bogus);
    FAIL() << "expected a precondition error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}
