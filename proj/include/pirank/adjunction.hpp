#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pirank/graph.hpp"
#include "pirank/stacking.hpp"

namespace pirank {

// The square P -> Gamma -> Omega, P -> S -> Omega.
struct AdjunctionInstance {
  LabeledGraph omega;
  LabeledGraph gamma;
  GraphMorphism h;  // gamma -> omega
  LabeledGraph s;
  GraphMorphism w;  // s -> omega
  LabeledGraph p;
  GraphMorphism lambda;  // p -> gamma
  GraphMorphism sigma;   // p -> s
};

// Throws malformed_input unless the four maps are morphisms and the square commutes.
void validate(const AdjunctionInstance& inst);

// Three boundary circles of the genus one surface with three boundary
// components, mapped to the commutator abAB.
AdjunctionInstance borromean_instance();

enum class CellKind { vertex, edge };

// Sides C and U; each edge joins c to u.
struct BipartiteGraph {
  int c_count = 0;
  int u_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// The part of W over one cell of Gamma_u. Local C vertex i is S cell
// s_cells[i], local U vertex j is Gamma cell gamma_cells[j], and local edge
// k comes from P cell p_cells[k].
struct Fiber {
  CellKind kind = CellKind::vertex;
  int cell = 0;
  std::vector<int> s_cells;
  std::vector<int> gamma_cells;
  std::vector<int> p_cells;
  BipartiteGraph graph;
};

struct ResolvedSpace {
  LabeledGraph gamma_u;
  GraphMorphism gamma_to_u;
  GraphMorphism s_to_u;
  GraphMorphism p_to_u;
  GraphMorphism l;  // gamma_u -> omega
  LabeledGraph gamma_u_I;
  GraphMorphism fold_map;  // gamma_u -> gamma_u_I
  std::vector<Fiber> vertex_fibers;  // indexed by vertex of gamma_u
  std::vector<Fiber> edge_fibers;    // indexed by edge of gamma_u
  std::vector<int> boundary;         // Gamma edges with exactly one lambda-preimage
  std::vector<int> lambda_preimages;  // per Gamma edge

  int chi_gamma = 0;
  int chi_s = 0;
  int chi_p = 0;
  int chi_w = 0;          // chi(Gamma) + chi(S) - chi(P)
  int chi_w_fibers = 0;   // sum of chi(W_v) minus sum of chi(W_e)
  int chi_gamma_u = 0;
  int chi_gamma_u_I = 0;
  int chi_c = 0;          // sum of b1(W_v) minus sum of b1(W_e)
};

ResolvedSpace build(const AdjunctionInstance& inst);

struct DiReport {
  bool rho_injective = true;
  bool sigma_immersion = true;
  bool w_immersion = true;
  std::string witness;  // empty when irreducible

  bool holds() const noexcept { return rho_injective && sigma_immersion && w_immersion; }
};
DiReport check_diagrammatic_irreducibility(const AdjunctionInstance& inst);

struct DependenceReport {
  bool independent = false;          // boundary is nonempty
  bool strongly_independent = false;  // every edge fiber over w(E_S) meets the boundary twice
  std::vector<int> thin_edges;        // gamma_u edges over w(E_S) meeting the boundary fewer than twice

  bool weakly_dependent() const noexcept { return !strongly_independent; }
};
DependenceReport classify_dependence(const ResolvedSpace& space);

struct CircleCovering {
  bool s_is_circle = false;
  bool covering = false;            // every component of P covers S
  std::vector<int> degrees;         // per component of P
  int degree = 0;
};
CircleCovering circle_covering(const AdjunctionInstance& inst);

// Whether the loop S -> Omega is not a proper power. Requires S a circle.
bool is_indivisible(const AdjunctionInstance& inst);

struct Increments {
  std::vector<int> up;    // dim A^+ of order[i]
  std::vector<int> down;  // dim A^- of order[i]
};
// Betti increments of the sublevel filtrations; `order` lists the C side
// in increasing order.
Increments increments(const BipartiteGraph& b, std::span<const int> order);

struct UpDownResult {
  Increments increments;
  std::vector<int> good_c;
  std::vector<int> good_u;
};
// Requires b simple, connected and not a point. Throws invariant when fewer
// than two vertices are good.
UpDownResult updown_check(const BipartiteGraph& b, std::span<const int> order);

struct FiberFiltration {
  CellKind kind = CellKind::vertex;
  int cell = 0;
  std::vector<int> order;  // S cells in increasing order
  std::vector<int> up;
  std::vector<int> down;
  int b1 = 0;
  std::vector<int> good_s;      // S cells, edge fibers only
  std::vector<int> good_gamma;  // Gamma cells, edge fibers only
};

struct FiltrationReport {
  std::vector<FiberFiltration> fibers;  // fibers with a nonempty S side
  int chi_c = 0;
  int chi_c_plus = 0;
  int chi_c_minus = 0;
  int max_increment = 0;
};

// Requires a valid stacking of S -> Omega and diagrammatic irreducibility.
FiltrationReport filtration(const AdjunctionInstance& inst, const ResolvedSpace& space, const Stacking& st);

struct DependenceTheoremReport {
  DiReport di;
  CircleCovering covering;
  bool indivisible = false;
  DependenceReport dependence;

  int chi_gamma = 0;
  int degree = 0;
  int chi_gamma_u = 0;
  int chi_w = 0;
  int chi_c = 0;
  int free_rank = 0;  // b1 of gamma_u_I

  bool hypotheses_hold = false;
  bool inequality_asserted = false;
  bool inequality_holds = true;  // chi_gamma + degree - 1 <= chi_gamma_u
  bool wcycles_asserted = false;
  bool wcycles_holds = true;     // chi_gamma + degree <= 0
  bool circle_valence_holds = true;
  std::optional<FiltrationReport> filtration;

  int lhs() const noexcept { return chi_gamma + degree - 1; }
  bool violated() const noexcept {
    return !inequality_holds || !wcycles_holds || !circle_valence_holds;
  }
};

// Checks the hypotheses, classifies, and when weakly dependent compares
// both sides. A stacking is searched for when none is supplied.
DependenceTheoremReport verify_dependence_theorem(const AdjunctionInstance& inst,
                                                  const std::optional<Stacking>& st = std::nullopt);

// Four `graph <name>` blocks (omega, gamma, s, p) followed by
// `map <h|w|lambda|sigma> v<id> -> v<id>` and `... e<id> -> e<id>` lines.
// Maps to a rose omega may be left out; they are then read from the labels.
AdjunctionInstance parse_instance(std::string_view text);
std::string to_text(const AdjunctionInstance& inst);

}  // namespace pirank
