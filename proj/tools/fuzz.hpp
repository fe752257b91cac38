#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pirank/adjunction.hpp"
#include "pirank/twocomplex.hpp"

namespace pirank::fuzz {

using Rng = std::mt19937_64;

// Generator for trial i of a run; trials replay independently of each other.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

Word random_cyclic_word(Rng& rng, int rank, int min_length, int max_length);
Word random_indivisible_word(Rng& rng, int rank, int min_length, int max_length);

// Disjoint circles covering the cycle of w, circle c wrapping degrees[c]
// times. position[] gives the cell of the w-cycle under each vertex and
// under each edge (vertex k and edge k of a circle share a position).
struct Circles {
  LabeledGraph p;
  std::vector<int> vertex_position;
  std::vector<int> edge_position;
  std::vector<int> first_edge;  // per circle
  std::vector<int> length;      // per circle
};
Circles covering_circles(const Word& w, int rank, const std::vector<int>& degrees);

// Picks, for P edge e, one of the candidate Gamma edges (same label and
// endpoints) to merge into, or -1 for a new edge. Called for every edge.
using EdgePolicy = std::function<int(int e, const std::vector<int>& candidates)>;

struct CircleQuotient {
  LabeledGraph gamma;
  GraphMorphism lambda;
};
// vertex_class[v] is any integer; equal values are identified.
CircleQuotient quotient(const Circles& c, const std::vector<int>& vertex_class, const EdgePolicy& policy);

std::vector<int> random_vertex_classes(Rng& rng, int n);

// The square P -> Gamma, P -> S for a quotient of covering circles.
AdjunctionInstance circle_instance(const Word& w, int rank, const Circles& c, const CircleQuotient& q);
// The domain faces are the images of the circles.
BranchedMap circle_branched_map(const Word& w, int rank, const Circles& c, const CircleQuotient& q,
                                const std::vector<int>& degrees);

struct DependenceLimits {
  int rank = 2;
  int max_s = 8;
  int max_gamma_edges = 12;
  int max_degree = 4;
  int total_degree = 0;  // when positive, deg sigma is exactly this
};
// One draw; nullopt unless the draw is irreducible and weakly dependent
// within the limits.
std::optional<AdjunctionInstance> draw_weakly_dependent(Rng& rng, const DependenceLimits& limits = {});

BipartiteGraph random_bipartite(Rng& rng, int max_side);
std::vector<int> random_order(Rng& rng, int n);

// A connected branched map to a one-relator complex with an indivisible
// relator; total_degree > 0 fixes the sum of the face degrees.
std::optional<BranchedMap> draw_branched_map(Rng& rng, int rank = 2, int max_length = 6, int max_degree = 4,
                                             int total_degree = 0);

// A connected immersion to the complex of w, obtained by folding a random
// quotient of one to three disks.
std::optional<BranchedMap> draw_immersion(Rng& rng, const Word& w, int rank);

struct FuzzSummary {
  std::string kind;
  std::uint64_t seed = 0;
  int trials = 0;
  std::uint64_t draws = 0;
  int checked = 0;
  int asserted = 0;
  int equality = 0;
  int violations = 0;
  std::string first_violation;
  std::vector<std::string> lines;  // per-trial detail, kept short
};

// kind is dependence, updown or pushout. Throws budget when the rejection
// sampler needs more than max_draws draws in one trial.
FuzzSummary run_fuzz(const std::string& kind, std::uint64_t seed, int trials, std::uint64_t max_draws = 200000);

}  // namespace pirank::fuzz
