#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pirank/error.hpp"
#include "pirank/prank.hpp"

using namespace pirank;

TEST(PrimitivityRank, Powers) {
  for (const char* u : {"a", "b", "ab", "aab", "abAB"}) {
    for (int k = 2; k <= 3; ++k) {
      const Word w = parse_word(u, Alphabet(2)).power(k);
      const auto r = primitivity_rank(w, 2);
      EXPECT_EQ(r.pi, 1) << to_string(w);
      EXPECT_TRUE(r.proper_power);
      EXPECT_EQ(negative_immersions_verdict(r), Verdict::torsion);
    }
  }
}

TEST(PrimitivityRank, WSubgroupOfAPowerIsItsRoot) {
  for (const char* u : {"a", "ab", "aab", "abAB"}) {
    const Word root = parse_word(u, Alphabet(2));
    const auto r = primitivity_rank(root.power(3), 2);
    ASSERT_EQ(r.w_subgroups.size(), 1u) << u;
    LabeledGraph cycle = word_to_cycle(root, Alphabet(2));
    cycle.set_base(0);
    EXPECT_EQ(unbased_canonical_form(r.w_subgroups[0].graph), unbased_canonical_form(cycle)) << u;
    EXPECT_EQ(r.w_subgroups[0].w_in_basis.size(), 3u);
  }
}

TEST(PrimitivityRank, Examples) {
  EXPECT_FALSE(primitivity_rank(parse_word("a"), 2).pi.has_value());
  EXPECT_FALSE(primitivity_rank(parse_word("abb"), 2).pi.has_value());
  EXPECT_EQ(primitivity_rank(parse_word("abAB"), 2).pi, 2);
  EXPECT_EQ(primitivity_rank(parse_word("aabb"), 2).pi, 2);
  EXPECT_EQ(primitivity_rank(parse_word("aabbcc"), 3).pi, 3);
  EXPECT_EQ(negative_immersions_verdict(parse_word("aabbcc"), 3), Verdict::negative);
  EXPECT_EQ(negative_immersions_verdict(parse_word("abAB"), 2), Verdict::nonpositive_only);
}

TEST(PrimitivityRank, AgreesWithUnprunedEnumeration) {
  for (const Word& w : oracle::word_classes(7, 3)) {
    EXPECT_EQ(primitivity_rank(w, 3).pi, oracle::primitivity_rank(w, 3)) << to_string(w);
  }
}

TEST(PrimitivityRank, ConjugacyAndInversionInvariant) {
  for (const Word& w : oracle::word_classes(6, 2)) {
    const auto pi = primitivity_rank(w, 2).pi;
    EXPECT_EQ(primitivity_rank(w.inverse(), 2).pi, pi);
    EXPECT_EQ(primitivity_rank(w.rotated(1), 2).pi, pi);
    EXPECT_EQ(primitivity_rank(parse_word("b") * w * parse_word("B"), 2).pi, pi);
  }
}

TEST(PrimitivityRank, RankTwoWordsHaveOnePeripheralSubgroup) {
  for (const Word& w : oracle::word_classes(8, 2)) {
    const auto r = primitivity_rank(w, 2);
    if (r.pi != 2) continue;
    EXPECT_EQ(r.w_subgroups.size(), 1u) << to_string(w);
    EXPECT_TRUE(peripheral_subgroup(r).has_value());
  }
}

TEST(PrimitivityRank, BudgetAndRankErrors) {
  EnumerationOptions tiny;
  tiny.budget = 3;
  try {
    primitivity_rank(parse_word("aabbaabbab"), 2, tiny);
    FAIL() << "expected the budget to run out";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget);
  }
  EXPECT_THROW(primitivity_rank(parse_word("abc"), 2), Error);
}
