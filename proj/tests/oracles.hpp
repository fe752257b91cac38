#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pirank/adjunction.hpp"
#include "pirank/graph.hpp"
#include "pirank/twocomplex.hpp"
#include "pirank/words.hpp"

// Slow reference implementations used only by the tests.
namespace oracle {

using pirank::LabeledGraph;
using pirank::Word;

// Primitivity rank by running over every set partition of the w-cycle's
// vertices. nullopt is infinity.
std::optional<int> primitivity_rank(const Word& w, int rank);

// Folding by repeated scans for a pair of clashing edges.
LabeledGraph naive_fold(const LabeledGraph& g);

// Cyclically reduced words of each length up to `max_length` over `rank`
// generators, one per class under rotation, inversion and signed
// relabelling of generators.
std::vector<Word> word_classes(int max_length, int rank);

// Brute-force primitivity in rank 2: breadth-first search over the orbit of
// the cyclic word under all Nielsen automorphisms, capped by length.
bool is_primitive_rank2(const Word& w, std::size_t length_cap);

// Every identification of the cells of Gamma and S that glues lambda(p) to
// sigma(p), respects the maps to Omega and is a graph quotient. Cells are
// numbered Gamma vertices, S vertices for `vertex`; Gamma edges, S edges for
// `edge`.
struct Identification {
  std::vector<int> vertex;
  std::vector<int> edge;
};
struct Poset {
  std::vector<Identification> objects;
  int finest = -1;  // the unique object refining every other, or -1
};
Poset one_relator_poset(const pirank::AdjunctionInstance& inst);
bool refines(const Identification& a, const Identification& b);
bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

// Folds a combinatorial map by scanning for a pair of edges with one image
// and a common start or end, until none is left, then merges faces with the
// same target and the same boundary read from target position 0.
pirank::TwoComplex naive_fold_complex(const pirank::TwoComplex& y, const pirank::ComplexMap& f);

}  // namespace oracle
