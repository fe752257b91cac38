#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pirank/error.hpp"
#include "pirank/words.hpp"

using namespace pirank;

namespace {

Word w(const char* s) { return parse_word(s); }

}  // namespace

TEST(Words, ReductionCancelsAdjacentInverses) {
  EXPECT_EQ(to_string(w("abBA")), "");
  EXPECT_EQ(to_string(w("aBbA")), "");
  EXPECT_EQ(to_string(w("abBc")), "ac");
  EXPECT_EQ(w("ab") * w("Ba"), w("aa"));
  EXPECT_EQ(w("abc").inverse(), w("CBA"));
}

TEST(Words, CyclicReduceReducesFirst) {
  const auto r = cyclic_reduce(w("BAaba"));
  EXPECT_EQ(to_string(r.core), "a");
  EXPECT_EQ(to_string(r.conjugator), "");
  const auto s = cyclic_reduce(w("abcA"));
  EXPECT_EQ(to_string(s.core), "bc");
  EXPECT_EQ(s.conjugator * s.core * s.conjugator.inverse(), w("abcA"));
}

TEST(Words, CyclicCoreIsShortestInItsConjugacyClass) {
  for (const Word& core : oracle::word_classes(4, 2)) {
    for (const char* c : {"a", "b", "AB", "ba"}) {
      const Word conj = w(c);
      const Word x = conj * core * conj.inverse();
      const Word back = cyclic_reduce(x).core;
      EXPECT_EQ(back.size(), core.size()) << to_string(x);
      EXPECT_EQ(cyclic_normal_form(back), cyclic_normal_form(core));
    }
  }
}

TEST(Words, MaximalRoot) {
  EXPECT_EQ(maximal_root(w("abab")).exponent, 2);
  EXPECT_EQ(to_string(maximal_root(w("abab")).root), "ab");
  EXPECT_EQ(maximal_root(w("aaa")).exponent, 3);
  EXPECT_EQ(maximal_root(w("abAB")).exponent, 1);
  EXPECT_EQ(maximal_root(w("a")).exponent, 1);
  EXPECT_EQ(maximal_root(w("uvuv")).exponent, 2);
}

TEST(Words, NormalFormIgnoresRotationAndInversion) {
  EXPECT_EQ(cyclic_normal_form(w("abAB")), cyclic_normal_form(w("BAba")));
  EXPECT_EQ(cyclic_normal_form(w("aab")), cyclic_normal_form(w("BAA")));
  EXPECT_NE(cyclic_normal_form(w("aab")), cyclic_normal_form(w("abb")));
}

TEST(Words, ParseRejectsForeignLetters) {
  EXPECT_THROW(parse_word("abc", Alphabet(2)), Error);
  EXPECT_THROW(parse_word("a1", Alphabet(2)), Error);
  EXPECT_EQ(infer_rank("aCb"), 3);
}

TEST(Words, KernelRankOfConjugatesOfA) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Word> images;
    Word b_power;
    for (int i = 0; i < n; ++i) {
      images.push_back(b_power * w("a") * b_power.inverse());
      b_power = b_power * w("b");
    }
    EXPECT_EQ(abelianization_kernel_rank(images, Alphabet(2)), n - 1);
  }
  const std::vector<Word> basis{w("a"), w("b")};
  EXPECT_EQ(abelianization_kernel_rank(basis, Alphabet(2)), 0);
  const std::vector<Word> commutator{w("abAB")};
  EXPECT_EQ(abelianization_kernel_rank(commutator, Alphabet(2)), 1);
}

TEST(Words, RationalRank) {
  EXPECT_EQ(rational_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rational_rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 2);
  EXPECT_EQ(rational_rank({}), 0);
}
