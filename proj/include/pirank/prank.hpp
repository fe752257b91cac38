#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pirank/graph.hpp"
#include "pirank/words.hpp"

namespace pirank {

// One-relator presentation <x_1..x_rank | relator>.
struct Presentation {
  int rank = 0;
  Word relator;
};

struct WSubgroup {
  LabeledGraph graph;  // based immersed core graph over the rose
  int rank = 0;
  Word w_in_basis;     // in the spanning-tree basis of the graph
  Presentation presentation;
};

struct PrimitivityRankReport {
  std::optional<int> pi;  // nullopt is infinity
  std::vector<WSubgroup> w_subgroups;
  bool proper_power = false;
  bool primitive = false;
  bool trivial = false;
  Word core;        // cyclic reduction of the input
  Word conjugator;  // input == conjugator * core * conjugator^-1
  std::uint64_t quotients = 0;  // candidate graphs examined
};

struct EnumerationOptions {
  std::uint64_t budget = 50'000'000;  // search nodes
};

struct QuotientCandidate {
  LabeledGraph graph;  // based at the image of cycle vertex 0
  int rank = 0;
};

// Folded quotients of the based w-cycle with every edge covered at least
// twice by w, each up to based isomorphism.
std::vector<QuotientCandidate> enumerate_quotients(const Word& w, int rank,
                                                   const EnumerationOptions& options = {});

PrimitivityRankReport primitivity_rank(const Word& w, int rank,
                                       const EnumerationOptions& options = {});

// The unique w-subgroup when pi = 2.
std::optional<WSubgroup> peripheral_subgroup(const PrimitivityRankReport& report);

enum class Verdict { negative, nonpositive_only, torsion, primitive_or_trivial };

Verdict negative_immersions_verdict(const PrimitivityRankReport& report);
Verdict negative_immersions_verdict(const Word& w, int rank);
std::string to_string(Verdict v);
std::string pi_string(const std::optional<int>& pi);

}  // namespace pirank
