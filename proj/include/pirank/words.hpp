#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pirank {

// A letter is a signed generator index: +i is the i-th generator (1-based),
// -i its inverse.
using Letter = int;

constexpr Letter inverse(Letter x) noexcept { return -x; }
constexpr int generator(Letter x) noexcept { return x < 0 ? -x : x; }

// Index of a letter in the symmetrized alphabet: a=0, A=1, b=2, B=3, ...
constexpr int letter_index(Letter x) noexcept {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}
constexpr Letter letter_from_index(int i) noexcept {
  return (i % 2 == 0) ? i / 2 + 1 : -(i / 2 + 1);
}

class Alphabet {
 public:
  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  bool contains(Letter x) const noexcept {
    return x != 0 && generator(x) <= rank_;
  }
  // All 2*rank letters in index order.
  std::vector<Letter> letters() const;

 private:
  int rank_;
};

// A freely reduced word. Construction always reduces.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;
  bool is_cyclically_reduced() const noexcept;
  // Largest generator index occurring; 0 for the empty word.
  int max_generator() const noexcept;

  // Rotation by k letters; only meaningful for cyclically reduced words.
  Word rotated(std::size_t k) const;
  Word power(int k) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);

// ASCII convention: a..z are generators 1..26, A..Z their inverses.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Parses without a declared alphabet; the rank is inferred (see infer_rank).
Word parse_word(std::string_view text);
std::vector<Letter> parse_letters(std::string_view text, const Alphabet& alphabet);
// Highest generator mentioned in the text (at least 1).
int infer_rank(std::string_view text);
char letter_name(Letter x);
std::string to_string(const Word& w);
std::string to_string(std::span<const Letter> letters);

struct CyclicReduction {
  Word core;
  Word conjugator;  // conjugator * core * conjugator^-1 == w
};
CyclicReduction cyclic_reduce(const Word& w);

struct RootDecomposition {
  Word root;
  int exponent = 1;
};
// Requires w nonempty and cyclically reduced.
RootDecomposition maximal_root(const Word& w);

// Least rotation of w or w^-1; w cyclically reduced. Conjugacy-class key.
Word cyclic_normal_form(const Word& w);

// Rank of the kernel of H_1(H) -> H_1(F) for H free on the listed images.
int abelianization_kernel_rank(std::span<const Word> images, const Alphabet& ambient);
// Rank over Q of an integer matrix, by fraction-free elimination.
int rational_rank(std::vector<std::vector<long long>> rows);

}  // namespace pirank
