#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pirank/words.hpp"

namespace pirank {

// Type-II Whitehead automorphism (A, a). `subset` is a bitmask over
// letter_index; it contains a and not a^-1. A letter y != a^+-1 maps to
// (a^-1 if y^-1 in A) y (a if y in A).
struct WhiteheadMove {
  Letter multiplier = 1;
  std::uint32_t subset = 0;

  friend bool operator==(const WhiteheadMove&, const WhiteheadMove&) = default;
};

// Image of a cyclic word, cyclically reduced.
Word apply_move(const WhiteheadMove& m, const Word& w);
WhiteheadMove inverse(const WhiteheadMove& m);
// Every nontrivial (A, a) in the given rank.
std::vector<WhiteheadMove> all_moves(int rank);

// Signed permutation of generators: generator i goes to image[i-1] (a letter).
Word relabel(const Word& w, std::span<const Letter> image);

struct MinimizationTrace {
  std::vector<Word> start;
  std::vector<WhiteheadMove> moves;
  std::vector<Word> end;
  std::size_t length = 0;
};

std::size_t cyclic_length(std::span<const Word> tuple);
// Greedy descent: at each step the move with the largest decrease.
MinimizationTrace whitehead_minimize(std::span<const Word> tuple, int rank);

enum class Primitivity { trivial, primitive, imprimitive };

Primitivity primitivity(const Word& w, int rank);
bool is_primitive(const Word& w, int rank);
bool in_proper_free_factor(const Word& w, int rank);
bool is_sub_basis(std::span<const Word> tuple, int rank);

// Least form of a cyclic word under rotation, inversion and signed
// relabelling of generators.
std::vector<Letter> cyclic_shape(const Word& w);

}  // namespace pirank
