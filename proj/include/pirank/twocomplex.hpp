#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pirank/adjunction.hpp"
#include "pirank/graph.hpp"
#include "pirank/prank.hpp"
#include "pirank/whitehead.hpp"
#include "pirank/words.hpp"

namespace pirank {

// One step of an edge path: e >= 0 crosses edge e forwards, ~e backwards.
using Step = int;
constexpr int step_edge(Step s) noexcept { return s >= 0 ? s : ~s; }
constexpr bool step_forward(Step s) noexcept { return s >= 0; }
constexpr Step reverse_step(Step s) noexcept { return ~s; }

struct TwoComplex {
  LabeledGraph skeleton;
  std::vector<std::vector<Step>> faces;  // closed, cyclically reduced edge paths

  int num_faces() const noexcept { return static_cast<int>(faces.size()); }
  int euler_characteristic() const;

  friend bool operator==(const TwoComplex&, const TwoComplex&) = default;
};

// Throws malformed_input unless every face is a closed, nonempty,
// cyclically reduced path.
void validate(const TwoComplex& y);

int start_vertex(const LabeledGraph& g, Step s);
int end_vertex(const LabeledGraph& g, Step s);
std::vector<Step> reversed_path(std::span<const Step> path);
// Signed labels read along a face.
std::vector<Letter> face_letters(const TwoComplex& y, int face);

// The rose of the given rank with one face attached along w.
TwoComplex one_relator_complex(const Word& w, int rank);

// A cellular map. Face g of the domain wraps degree[g] times around face
// face_target[g], its step k landing on step (face_offset[g] + k) mod the
// target length.
struct ComplexMap {
  GraphMorphism skeleton;
  std::vector<int> face_target;
  std::vector<int> face_offset;
  std::vector<int> degree;

  friend bool operator==(const ComplexMap&, const ComplexMap&) = default;
};

// Empty when m is a branched map y -> x; otherwise the first defect found.
std::string branched_map_defect(const TwoComplex& y, const TwoComplex& x, const ComplexMap& m);
// Branched, immersed on the skeleton and unbranched on every face.
bool is_immersion(const TwoComplex& y, const TwoComplex& x, const ComplexMap& m);

struct BranchedMap {
  TwoComplex domain;
  TwoComplex codomain;
  ComplexMap map;

  int degree_sum() const;
  int branching() const;  // sum over faces of (degree - 1)
};

// Maps y to a complex whose skeleton is a rose, reading labels. Faces that
// read a target face backwards are reversed. Throws domain when the labels
// do not give a branched map.
BranchedMap branched_map_by_labels(TwoComplex y, const TwoComplex& x);

struct ComplexFolding {
  TwoComplex z;
  ComplexMap front;  // y -> z, surjective
  ComplexMap back;   // z -> x, an immersion
};
// Requires f combinatorial (every degree 1).
ComplexFolding fold_complex_map(const TwoComplex& y, const TwoComplex& x, const ComplexMap& f);

// Face g crosses edge e exactly once and no other face crosses e.
struct FreeFace {
  int face = 0;
  int edge = 0;

  friend bool operator==(const FreeFace&, const FreeFace&) = default;
};
std::vector<FreeFace> free_faces(const TwoComplex& y);
// Removes the open face and the open edge.
TwoComplex collapse(const TwoComplex& y, const FreeFace& c);
// Edges crossed exactly once in total by the faces.
std::vector<int> boundary_edges(const TwoComplex& y);

struct NielsenTrace {
  std::vector<FreeFace> collapses;
  TwoComplex reduced;                // after collapsing free faces to a fixpoint
  int rank = 0;                      // of pi_1 of the reduced skeleton
  std::vector<Word> attaching_words;  // conjugacy classes in a spanning-tree basis
  MinimizationTrace whitehead;
  bool reduces = false;
};
// Requires y connected.
NielsenTrace nielsen_reduce(const TwoComplex& y);
bool nielsen_reduces_to_graph(const TwoComplex& y);

// The square for a branched map to a one-face complex: Gamma is the
// skeleton of the domain, S the attaching circle of the target face, P the
// attaching circles of the domain faces.
AdjunctionInstance adjunction_of(const BranchedMap& f);

struct PushoutResult {
  TwoComplex y_hat;
  TwoComplex y_hat_I;
  ComplexMap f_z;    // domain -> y_hat
  ComplexMap g_z;    // y_hat -> codomain
  GraphMorphism to_folded;  // skeleton of y_hat -> skeleton of y_hat_I
  int chi_y = 0;
  int chi_y_hat = 0;
  int chi_y_hat_I = 0;
  bool degenerate = false;  // the domain has no faces
};
PushoutResult one_relator_pushout(const BranchedMap& f);

struct PushoutInequalityReport {
  bool relator_indivisible = true;
  Word relator_root;             // set when the relator is a proper power
  std::vector<int> coverage;     // per target skeleton edge: boundary edges over it
  bool two_to_one = false;       // every edge crossed by the relator is covered twice
  int chi_y = 0;
  int branching = 0;
  int chi_y_hat = 0;
  int chi_y_hat_I = 0;
  bool asserted = false;
  bool holds = true;             // chi_y + branching <= chi_y_hat
  bool immersion_case = false;   // an immersion without free faces
  bool immersion_holds = true;   // chi_y <= chi_y_hat

  bool violated() const noexcept { return !holds || !immersion_holds; }
};
PushoutInequalityReport pushout_inequality(const BranchedMap& f);

enum class Classification { reduces_to_graph, factors_through, boundary_case_violation };
std::string to_string(Classification c);

struct ClassificationResult {
  Classification kind = Classification::reduces_to_graph;
  int subgroup = -1;  // index into the report's w-subgroups
  int chi_y = 0;
  int chi_y_hat_I = 0;
  int rank = 0;       // of pi_1 of the skeleton of y_hat_I
  std::string detail;
};
// Requires an immersion from a connected complex with no free faces, a core
// skeleton and chi >= 2 - pi(w); throws precondition otherwise.
ClassificationResult classify_immersion(const BranchedMap& f, const PrimitivityRankReport& pr);

// Cover of the one-relator complex of w given by one permutation per
// generator. Throws domain unless w lifts to closed loops.
TwoComplex finite_cover(const Word& w, int rank, const std::vector<std::vector<int>>& permutations);

// Graph lines plus `face <id> <step> ...` with steps `+e` or `-e`.
std::string to_text(const TwoComplex& y);
TwoComplex parse_complex(std::string_view text);

// `complex y` and `complex x` blocks, optionally followed by
// `map v<i> -> v<j>`, `map e<i> -> e<j>` and `map f<i> -> f<j> <offset> <degree>`.
// Without map lines the map is read from the labels.
BranchedMap parse_branched_map(std::string_view text);
std::string to_text(const BranchedMap& f);

}  // namespace pirank
