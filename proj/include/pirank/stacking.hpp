#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pirank/graph.hpp"
#include "pirank/words.hpp"

namespace pirank {

// Orders on the fibers of an immersion S -> Omega, keyed by the Omega cell.
// Each list holds the cells of S over that cell in increasing order.
struct Stacking {
  std::map<int, std::vector<int>> vertex_orders;
  std::map<int, std::vector<int>> edge_orders;

  friend bool operator==(const Stacking&, const Stacking&) = default;
};

struct StackingOptions {
  std::uint64_t budget = 10'000'000;  // search nodes
};

// Exhaustive search. nullopt means no stacking exists.
std::optional<Stacking> search_stacking(const LabeledGraph& s, const GraphMorphism& w,
                                        const LabeledGraph& target, const StackingOptions& options = {});

// Stacking of the cycle of an indivisible cyclically reduced word over the rose.
Stacking find_stacking(const Word& w, int rank, const StackingOptions& options = {});
std::optional<Stacking> search_stacking(const Word& w, int rank, const StackingOptions& options = {});

bool verify_stacking(const LabeledGraph& s, const GraphMorphism& w, const LabeledGraph& target,
                     const Stacking& st);
bool verify_stacking(const Word& w, int rank, const Stacking& st);

Stacking reversed(const Stacking& st);

// One line per fiber: `fiber v<id> ...` for vertices, `fiber <letter> ...`
// (or `fiber e<id> ...` when unlabelled) for edges.
std::string to_text(const Stacking& st, const LabeledGraph& target);

}  // namespace pirank
