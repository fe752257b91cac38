#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "pirank/error.hpp"
#include "pirank/twocomplex.hpp"

using namespace pirank;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// The partition of Gamma and S cells made by the pushout graph.
oracle::Identification pushout_partition(const AdjunctionInstance& inst) {
  const ResolvedSpace space = build(inst);
  oracle::Identification id;
  id.vertex = space.gamma_to_u.vertex_map;
  id.vertex.insert(id.vertex.end(), space.s_to_u.vertex_map.begin(), space.s_to_u.vertex_map.end());
  id.edge = space.gamma_to_u.edge_map;
  id.edge.insert(id.edge.end(), space.s_to_u.edge_map.begin(), space.s_to_u.edge_map.end());
  return id;
}

void expect_finest_is_pushout(const BranchedMap& f) {
  const AdjunctionInstance inst = adjunction_of(f);
  const oracle::Poset poset = oracle::one_relator_poset(inst);
  ASSERT_GE(poset.finest, 0);
  const oracle::Identification id = pushout_partition(inst);
  const oracle::Identification& finest = poset.objects[static_cast<std::size_t>(poset.finest)];
  EXPECT_TRUE(oracle::same_partition(finest.vertex, id.vertex));
  EXPECT_TRUE(oracle::same_partition(finest.edge, id.edge));
}

TwoComplex torus() { return one_relator_complex(parse_word("abAB"), 2); }

}  // namespace

TEST(TwoComplex, OneRelatorComplex) {
  const TwoComplex x = one_relator_complex(parse_word("aab"), 2);
  EXPECT_EQ(x.euler_characteristic(), 0);
  EXPECT_EQ(face_letters(x, 0), parse_word("aab").letters());
  EXPECT_EQ(torus().euler_characteristic(), 0);
  EXPECT_THROW(one_relator_complex(parse_word("abA"), 2), Error);
}

TEST(TwoComplex, TextRoundTrip) {
  const TwoComplex cover = parse_complex(read(PIRANK_DATA_DIR "/torus_double_cover.cx"));
  EXPECT_EQ(cover, finite_cover(parse_word("abAB"), 2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(parse_complex(to_text(cover)), cover);
  const BranchedMap f = parse_branched_map(read(PIRANK_DATA_DIR "/branched_disk.map"));
  const BranchedMap g = parse_branched_map(to_text(f));
  EXPECT_EQ(g.map, f.map);
  EXPECT_EQ(g.domain, f.domain);
  EXPECT_THROW(parse_complex("v 0\ne 0 0 0 a\nface 0 +0 +1\n"), Error);
  EXPECT_THROW(parse_complex("v 0\nv 1\ne 0 0 1 a\nface 0 +0\n"), Error);
}

TEST(TwoComplex, BranchedDefectsAreFound) {
  const BranchedMap f = parse_branched_map(read(PIRANK_DATA_DIR "/branched_disk.map"));
  EXPECT_EQ(f.map.degree, std::vector<int>{2});
  EXPECT_EQ(f.branching(), 1);
  EXPECT_TRUE(branched_map_defect(f.domain, f.codomain, f.map).empty());
  EXPECT_FALSE(is_immersion(f.domain, f.codomain, f.map));
  ComplexMap off = f.map;
  off.face_offset[0] = 1;
  EXPECT_FALSE(branched_map_defect(f.domain, f.codomain, off).empty());
  ComplexMap twice = f.map;
  twice.degree[0] = 1;
  EXPECT_FALSE(branched_map_defect(f.domain, f.codomain, twice).empty());
}

TEST(TwoComplex, FreeFacesAndCollapse) {
  EXPECT_TRUE(free_faces(torus()).empty());
  const TwoComplex disk = one_relator_complex(parse_word("aab"), 2);
  const auto free = free_faces(disk);
  ASSERT_EQ(free.size(), 1u);
  EXPECT_EQ(free[0].edge, 1);
  const TwoComplex rest = collapse(disk, free[0]);
  EXPECT_EQ(rest.num_faces(), 0);
  EXPECT_EQ(rest.skeleton.num_edges(), 1);
  EXPECT_EQ(rest.euler_characteristic(), disk.euler_characteristic());
  EXPECT_EQ(boundary_edges(disk), std::vector<int>{1});
}

TEST(TwoComplex, NielsenReduction) {
  EXPECT_TRUE(nielsen_reduces_to_graph(one_relator_complex(parse_word("a"), 2)));
  EXPECT_TRUE(nielsen_reduces_to_graph(one_relator_complex(parse_word("aab"), 2)));
  EXPECT_TRUE(nielsen_reduces_to_graph(one_relator_complex(parse_word("abbb"), 2)));
  EXPECT_FALSE(nielsen_reduces_to_graph(torus()));
  EXPECT_FALSE(nielsen_reduces_to_graph(one_relator_complex(parse_word("aa"), 2)));
  const NielsenTrace t = nielsen_reduce(torus());
  EXPECT_TRUE(t.collapses.empty());
  EXPECT_EQ(t.rank, 2);
  EXPECT_FALSE(t.reduces);
}

TEST(TwoComplex, IdentityPushoutIsTight) {
  const BranchedMap f = parse_branched_map(read(PIRANK_DATA_DIR "/identity.map"));
  const PushoutResult r = one_relator_pushout(f);
  EXPECT_EQ(r.y_hat_I, f.codomain);
  const PushoutInequalityReport rep = pushout_inequality(f);
  EXPECT_TRUE(rep.asserted);
  EXPECT_EQ(rep.chi_y + rep.branching, rep.chi_y_hat);
  EXPECT_FALSE(rep.violated());
}

TEST(TwoComplex, BranchedDiskPushout) {
  const BranchedMap f = parse_branched_map(read(PIRANK_DATA_DIR "/branched_disk.map"));
  const PushoutInequalityReport rep = pushout_inequality(f);
  EXPECT_EQ(rep.chi_y, 1);
  EXPECT_EQ(rep.branching, 1);
  // Every edge of the relator is covered at least twice by the boundary.
  EXPECT_FALSE(rep.asserted);
  EXPECT_FALSE(rep.violated());
  expect_finest_is_pushout(f);
}

TEST(TwoComplex, PosetFinestObjectIsThePushout) {
  expect_finest_is_pushout(parse_branched_map(read(PIRANK_DATA_DIR "/identity.map")));
  for (int t = 0; t < 30; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(17, t);
    const auto f = fuzz::draw_branched_map(rng, 2, 4, 2);
    if (!f || f->domain.skeleton.num_edges() > 6) continue;
    expect_finest_is_pushout(*f);
  }
}

TEST(TwoComplex, FoldingMatchesNaiveFolding) {
  for (int t = 0; t < 40; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(23, t);
    const auto f = fuzz::draw_branched_map(rng, 2, 5, 1);
    if (!f) continue;
    const ComplexFolding folded = fold_complex_map(f->domain, f->codomain, f->map);
    const TwoComplex naive = oracle::naive_fold_complex(f->domain, f->map);
    EXPECT_EQ(folded.z.skeleton.num_vertices(), naive.skeleton.num_vertices());
    EXPECT_EQ(folded.z.skeleton.num_edges(), naive.skeleton.num_edges());
    EXPECT_EQ(folded.z.num_faces(), naive.num_faces());
    EXPECT_TRUE(is_immersion(folded.z, f->codomain, folded.back));
  }
}

TEST(TwoComplex, FiniteCovers) {
  const TwoComplex c = finite_cover(parse_word("abAB"), 2, {{1, 2, 0}, {0, 1, 2}});
  EXPECT_EQ(c.skeleton.num_vertices(), 3);
  EXPECT_EQ(c.num_faces(), 3);
  EXPECT_EQ(c.euler_characteristic(), 0);
  EXPECT_THROW(finite_cover(parse_word("aab"), 2, {{0, 1}, {1, 0}}), Error);
}

TEST(TwoComplex, TorusCoversFactorThroughTheTorus) {
  const Word w = parse_word("abAB");
  const auto pr = primitivity_rank(w, 2);
  const BranchedMap f = branched_map_by_labels(finite_cover(w, 2, {{1, 0}, {0, 1}}), torus());
  const ClassificationResult r = classify_immersion(f, pr);
  EXPECT_EQ(r.kind, Classification::factors_through);
  EXPECT_EQ(r.subgroup, 0);
  EXPECT_EQ(r.chi_y, 0);
}

TEST(TwoComplex, ClassificationPreconditions) {
  const BranchedMap disk = parse_branched_map(read(PIRANK_DATA_DIR "/branched_disk.map"));
  const auto pr_disk = primitivity_rank(parse_word("aab"), 2);
  try {
    classify_immersion(disk, pr_disk);
    FAIL() << "a branched disk is not an immersion";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
  EXPECT_EQ(to_string(Classification::factors_through), "factors-through-Q");
}
