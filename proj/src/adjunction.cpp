#include "pirank/adjunction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pirank/error.hpp"
#include "pirank/union_find.hpp"

namespace pirank {

namespace {

int component_count(const LabeledGraph& g, std::vector<int>& label) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) uf.unite(e.from, e.to);
  return uf.classes(label);
}

std::string cell_name(CellKind kind, int id) { return (kind == CellKind::vertex ? "v" : "e") + std::to_string(id); }

// Cyclic sequence of signed Omega edges read around a circle, starting at vertex 0.
std::vector<int> circle_reading(const LabeledGraph& s, const GraphMorphism& w) {
  std::vector<int> out;
  if (s.num_edges() == 0) return out;
  std::vector<char> used(s.num_edges(), 0);
  int v = s.edge(0).from;
  for (int step = 0; step < s.num_edges(); ++step) {
    int next = -1;
    for (int e = 0; e < s.num_edges() && next < 0; ++e) {
      if (used[e]) continue;
      if (s.edge(e).from == v) {
        next = e;
        out.push_back(w.edge_map[e] + 1);
        v = s.edge(e).to;
      } else if (s.edge(e).to == v) {
        next = e;
        out.push_back(-(w.edge_map[e] + 1));
        v = s.edge(e).from;
      }
    }
    if (next < 0) break;
    used[next] = 1;
  }
  return out;
}

}  // namespace

void validate(const AdjunctionInstance& inst) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::malformed_input, "adjunction instance: " + what);
  };
  require(is_morphism(inst.gamma, inst.omega, inst.h), "h is not a morphism Gamma -> Omega");
  require(is_morphism(inst.s, inst.omega, inst.w), "w is not a morphism S -> Omega");
  require(is_morphism(inst.p, inst.gamma, inst.lambda), "lambda is not a morphism P -> Gamma");
  require(is_morphism(inst.p, inst.s, inst.sigma), "sigma is not a morphism P -> S");
  for (int v = 0; v < inst.p.num_vertices(); ++v) {
    require(inst.h.vertex_map[inst.lambda.vertex_map[v]] == inst.w.vertex_map[inst.sigma.vertex_map[v]],
            "square does not commute at P vertex " + std::to_string(v));
  }
  for (int e = 0; e < inst.p.num_edges(); ++e) {
    require(inst.h.edge_map[inst.lambda.edge_map[e]] == inst.w.edge_map[inst.sigma.edge_map[e]],
            "square does not commute at P edge " + std::to_string(e));
  }
}

AdjunctionInstance borromean_instance() {
  AdjunctionInstance inst;
  inst.omega = rose(2);
  // Triple cover of the rose: a-edges i -> i+1, a b-loop at every vertex.
  inst.gamma = LabeledGraph(3);
  for (int i = 0; i < 3; ++i) inst.gamma.add_edge(i, (i + 1) % 3, 1);
  for (int i = 0; i < 3; ++i) inst.gamma.add_edge(i, i, 2);
  inst.h = morphism_to_rose(inst.gamma);
  const Word w = parse_word("abAB");
  inst.s = word_to_cycle(w, Alphabet(2));
  inst.w = morphism_to_rose(inst.s);
  // Lift j of abAB starts at vertex j.
  inst.p = LabeledGraph(12);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 4; ++i) {
      const Edge& e = inst.s.edge(i);
      const int from = 4 * j + (e.from == i ? i : (i + 1) % 4);
      const int to = 4 * j + (e.from == i ? (i + 1) % 4 : i);
      inst.p.add_edge(from, to, e.label);
      inst.sigma.edge_map.push_back(i);
    }
    for (int i = 0; i < 4; ++i) inst.sigma.vertex_map.push_back(i);
    const int a = j;
    const int b = (j + 1) % 3;
    // Vertices of the lift: j, j+1, j+1, j.
    for (int v : {a, b, b, a}) inst.lambda.vertex_map.push_back(v);
    for (int e : {a, 3 + b, a, 3 + a}) inst.lambda.edge_map.push_back(e);
  }
  validate(inst);
  return inst;
}

ResolvedSpace build(const AdjunctionInstance& inst) {
  validate(inst);
  const int gv = inst.gamma.num_vertices();
  const int ge = inst.gamma.num_edges();
  const int sv = inst.s.num_vertices();
  const int se = inst.s.num_edges();
  // Gamma cells first, then S cells.
  UnionFind vertices(gv + sv);
  UnionFind edges(ge + se);
  for (int v = 0; v < inst.p.num_vertices(); ++v) vertices.unite(inst.lambda.vertex_map[v], gv + inst.sigma.vertex_map[v]);
  for (int e = 0; e < inst.p.num_edges(); ++e) edges.unite(inst.lambda.edge_map[e], ge + inst.sigma.edge_map[e]);

  ResolvedSpace r;
  std::vector<int> vclass;
  std::vector<int> eclass;
  const int nv = vertices.classes(vclass);
  const int ne = edges.classes(eclass);
  r.gamma_u = LabeledGraph(nv);
  std::vector<int> representative(ne, -1);
  for (int c = 0; c < ge + se; ++c) {
    if (representative[eclass[c]] < 0) representative[eclass[c]] = c;
  }
  r.l.vertex_map.assign(nv, -1);
  for (int c = 0; c < gv + sv; ++c) {
    r.l.vertex_map[vclass[c]] = c < gv ? inst.h.vertex_map[c] : inst.w.vertex_map[c - gv];
  }
  for (int k = 0; k < ne; ++k) {
    const int c = representative[k];
    const Edge& e = c < ge ? inst.gamma.edge(c) : inst.s.edge(c - ge);
    const int from = vclass[c < ge ? e.from : gv + e.from];
    const int to = vclass[c < ge ? e.to : gv + e.to];
    const int image = c < ge ? inst.h.edge_map[c] : inst.w.edge_map[c - ge];
    r.gamma_u.add_edge(from, to, inst.omega.edge(image).label);
    r.l.edge_map.push_back(image);
  }
  if (!is_morphism(r.gamma_u, inst.omega, r.l)) fail(ErrorKind::invariant, "Gamma_u does not map to Omega");

  for (int v = 0; v < gv; ++v) r.gamma_to_u.vertex_map.push_back(vclass[v]);
  for (int e = 0; e < ge; ++e) r.gamma_to_u.edge_map.push_back(eclass[e]);
  for (int v = 0; v < sv; ++v) r.s_to_u.vertex_map.push_back(vclass[gv + v]);
  for (int e = 0; e < se; ++e) r.s_to_u.edge_map.push_back(eclass[ge + e]);
  r.p_to_u = compose(inst.lambda, r.gamma_to_u);

  const Folding folded = fold_over(r.gamma_u, r.l.edge_map);
  r.gamma_u_I = folded.folded;
  r.fold_map = folded.quotient;

  // Fibers.
  r.vertex_fibers.resize(nv);
  r.edge_fibers.resize(ne);
  for (int k = 0; k < nv; ++k) r.vertex_fibers[k] = {CellKind::vertex, k, {}, {}, {}, {}};
  for (int k = 0; k < ne; ++k) r.edge_fibers[k] = {CellKind::edge, k, {}, {}, {}, {}};
  std::vector<int> s_local_v(sv), s_local_e(se), g_local_v(gv), g_local_e(ge);
  for (int v = 0; v < gv; ++v) {
    Fiber& f = r.vertex_fibers[vclass[v]];
    g_local_v[v] = static_cast<int>(f.gamma_cells.size());
    f.gamma_cells.push_back(v);
  }
  for (int v = 0; v < sv; ++v) {
    Fiber& f = r.vertex_fibers[vclass[gv + v]];
    s_local_v[v] = static_cast<int>(f.s_cells.size());
    f.s_cells.push_back(v);
  }
  for (int e = 0; e < ge; ++e) {
    Fiber& f = r.edge_fibers[eclass[e]];
    g_local_e[e] = static_cast<int>(f.gamma_cells.size());
    f.gamma_cells.push_back(e);
  }
  for (int e = 0; e < se; ++e) {
    Fiber& f = r.edge_fibers[eclass[ge + e]];
    s_local_e[e] = static_cast<int>(f.s_cells.size());
    f.s_cells.push_back(e);
  }
  for (int v = 0; v < inst.p.num_vertices(); ++v) {
    Fiber& f = r.vertex_fibers[vclass[inst.lambda.vertex_map[v]]];
    f.p_cells.push_back(v);
    f.graph.edges.emplace_back(s_local_v[inst.sigma.vertex_map[v]], g_local_v[inst.lambda.vertex_map[v]]);
  }
  for (int e = 0; e < inst.p.num_edges(); ++e) {
    Fiber& f = r.edge_fibers[eclass[inst.lambda.edge_map[e]]];
    f.p_cells.push_back(e);
    f.graph.edges.emplace_back(s_local_e[inst.sigma.edge_map[e]], g_local_e[inst.lambda.edge_map[e]]);
  }

  r.lambda_preimages.assign(ge, 0);
  for (int e : inst.lambda.edge_map) ++r.lambda_preimages[e];
  for (int e = 0; e < ge; ++e) {
    if (r.lambda_preimages[e] == 1) r.boundary.push_back(e);
  }

  // Characteristics, each side computed on its own.
  r.chi_gamma = betti_euler(inst.gamma).chi;
  r.chi_s = betti_euler(inst.s).chi;
  r.chi_p = betti_euler(inst.p).chi;
  r.chi_w = r.chi_gamma + r.chi_s - r.chi_p;
  r.chi_gamma_u = betti_euler(r.gamma_u).chi;
  r.chi_gamma_u_I = betti_euler(r.gamma_u_I).chi;
  auto fiber_terms = [&](std::vector<Fiber>& fibers, int sign) {
    for (Fiber& f : fibers) {
      f.graph.c_count = static_cast<int>(f.s_cells.size());
      f.graph.u_count = static_cast<int>(f.gamma_cells.size());
      std::vector<std::pair<int, int>> flat;
      for (auto [c, u] : f.graph.edges) flat.emplace_back(c, f.graph.c_count + u);
      const BettiEuler be = betti_euler(f.graph.c_count + f.graph.u_count, flat);
      if (be.components != 1) {
        fail(ErrorKind::invariant, "fiber over " + cell_name(f.kind, f.cell) + " is not connected");
      }
      r.chi_w_fibers += sign * be.chi;
      r.chi_c += sign * be.b1;
    }
  };
  fiber_terms(r.vertex_fibers, 1);
  fiber_terms(r.edge_fibers, -1);
  if (r.chi_w != r.chi_w_fibers) {
    fail(ErrorKind::invariant, "chi(W) = " + std::to_string(r.chi_w) + " but the fibers give " + std::to_string(r.chi_w_fibers));
  }
  if (r.chi_w != r.chi_gamma_u - r.chi_c) {
    fail(ErrorKind::invariant, "chi(W) != chi(Gamma_u) - chi(C)");
  }
  if (r.chi_gamma_u_I < r.chi_gamma_u) fail(ErrorKind::invariant, "folding Gamma_u decreased chi");
  return r;
}

DiReport check_diagrammatic_irreducibility(const AdjunctionInstance& inst) {
  validate(inst);
  DiReport report;
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < inst.p.num_edges(); ++e) {
    const std::pair key{inst.lambda.edge_map[e], inst.sigma.edge_map[e]};
    auto [it, fresh] = seen.emplace(key, e);
    if (!fresh && report.rho_injective) {
      report.rho_injective = false;
      report.witness = "P edges " + std::to_string(it->second) + " and " + std::to_string(e) + " both map to (Gamma edge " +
                       std::to_string(key.first) + ", S edge " + std::to_string(key.second) + ")";
    }
  }
  if (!is_immersion(inst.p, inst.s, inst.sigma)) {
    report.sigma_immersion = false;
    if (report.witness.empty()) report.witness = "sigma: P -> S is not an immersion";
  }
  if (!is_immersion(inst.s, inst.omega, inst.w)) {
    report.w_immersion = false;
    if (report.witness.empty()) report.witness = "w: S -> Omega is not an immersion";
  }
  if (report.holds()) {
    const ResolvedSpace space = build(inst);
    for (const Fiber& f : space.edge_fibers) {
      std::set<std::pair<int, int>> pairs(f.graph.edges.begin(), f.graph.edges.end());
      if (pairs.size() != f.graph.edges.size()) {
        fail(ErrorKind::invariant, "irreducible instance has a non-simple edge fiber over e" + std::to_string(f.cell));
      }
    }
  }
  return report;
}

DependenceReport classify_dependence(const ResolvedSpace& space) {
  DependenceReport report;
  report.independent = !space.boundary.empty();
  report.strongly_independent = true;
  for (const Fiber& f : space.edge_fibers) {
    if (f.s_cells.empty()) continue;
    int hits = 0;
    for (int e : f.gamma_cells) hits += space.lambda_preimages[e] == 1;
    if (hits < 2) {
      report.strongly_independent = false;
      report.thin_edges.push_back(f.cell);
    }
  }
  return report;
}

CircleCovering circle_covering(const AdjunctionInstance& inst) {
  CircleCovering out;
  std::vector<int> label;
  const auto valence = inst.s.valences();
  out.s_is_circle = inst.s.num_edges() > 0 && inst.s.num_vertices() == inst.s.num_edges() &&
                    component_count(inst.s, label) == 1 &&
                    std::all_of(valence.begin(), valence.end(), [](int k) { return k == 2; });
  if (!out.s_is_circle) return out;
  const int components = component_count(inst.p, label);
  std::vector<int> vertices(components, 0);
  std::vector<int> edges(components, 0);
  for (int v = 0; v < inst.p.num_vertices(); ++v) ++vertices[label[v]];
  for (const Edge& e : inst.p.edges()) ++edges[label[e.from]];
  const auto pval = inst.p.valences();
  out.covering = components > 0 && is_immersion(inst.p, inst.s, inst.sigma) &&
                 std::all_of(pval.begin(), pval.end(), [](int k) { return k == 2; });
  for (int j = 0; j < components; ++j) {
    // A closed walk around component j wraps |E_j| / |E_S| times.
    if (vertices[j] != edges[j] || edges[j] % inst.s.num_edges() != 0) out.covering = false;
    out.degrees.push_back(edges[j] / inst.s.num_edges());
    out.degree += out.degrees.back();
  }
  return out;
}

bool is_indivisible(const AdjunctionInstance& inst) {
  const std::vector<int> reading = circle_reading(inst.s, inst.w);
  const std::size_t n = reading.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = reading[i] == reading[(i + d) % n];
    if (periodic) return false;
  }
  return n > 0;
}

Increments increments(const BipartiteGraph& b, std::span<const int> order) {
  std::vector<std::vector<int>> star(b.c_count);
  for (auto [c, u] : b.edges) star[c].push_back(u);
  Increments out;
  auto sweep = [&](auto first, auto last, std::vector<int>& dims) {
    UnionFind uf(b.c_count + b.u_count);
    for (auto it = first; it != last; ++it) {
      int failed = 0;
      for (int u : star[*it]) failed += uf.unite(*it, b.c_count + u) ? 0 : 1;
      dims.push_back(failed);
    }
  };
  sweep(order.begin(), order.end(), out.up);
  std::vector<int> down;
  sweep(order.rbegin(), order.rend(), down);
  out.down.assign(down.rbegin(), down.rend());
  return out;
}

UpDownResult updown_check(const BipartiteGraph& b, std::span<const int> order) {
  std::set<std::pair<int, int>> pairs(b.edges.begin(), b.edges.end());
  if (pairs.size() != b.edges.size()) fail(ErrorKind::precondition, "updown_check: the graph is not simple");
  if (b.c_count + b.u_count < 2) fail(ErrorKind::precondition, "updown_check: the graph is a point");
  std::vector<std::pair<int, int>> flat;
  for (auto [c, u] : b.edges) flat.emplace_back(c, b.c_count + u);
  if (betti_euler(b.c_count + b.u_count, flat).components != 1) {
    fail(ErrorKind::precondition, "updown_check: the graph is not connected");
  }
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < b.c_count; ++i) {
    if (static_cast<int>(sorted.size()) != b.c_count || sorted[i] != i) {
      fail(ErrorKind::precondition, "updown_check: the order is not a permutation of C");
    }
  }
  UpDownResult out;
  out.increments = increments(b, order);
  std::vector<int> cval(b.c_count, 0);
  std::vector<int> uval(b.u_count, 0);
  for (auto [c, u] : b.edges) {
    ++cval[c];
    ++uval[u];
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    if (std::max(out.increments.up[i], out.increments.down[i]) == cval[c] - 1) out.good_c.push_back(c);
  }
  std::sort(out.good_c.begin(), out.good_c.end());
  for (int u = 0; u < b.u_count; ++u) {
    if (uval[u] == 1) out.good_u.push_back(u);
  }
  if (out.good_c.size() + out.good_u.size() < 2) {
    fail(ErrorKind::invariant, "up-down lemma violated: fewer than two good vertices");
  }
  return out;
}

FiltrationReport filtration(const AdjunctionInstance& inst, const ResolvedSpace& space, const Stacking& st) {
  const DiReport di = check_diagrammatic_irreducibility(inst);
  if (!di.holds()) fail(ErrorKind::precondition, "filtration needs diagrammatic irreducibility: " + di.witness);
  bool valid = false;
  try {
    valid = verify_stacking(inst.s, inst.w, inst.omega, st);
  } catch (const Error& e) {
    fail(ErrorKind::precondition, std::string("invalid stacking: ") + e.what());
  }
  if (!valid) fail(ErrorKind::precondition, "invalid stacking: the pullback condition fails");

  FiltrationReport report;
  std::vector<int> vertex_a_plus(inst.s.num_vertices()), vertex_a_minus(inst.s.num_vertices());
  std::vector<int> edge_a_plus(inst.s.num_edges()), edge_a_minus(inst.s.num_edges());
  auto run = [&](const Fiber& f, const std::map<int, std::vector<int>>& orders, int omega_cell) {
    if (f.s_cells.empty()) return;
    FiberFiltration ff;
    ff.kind = f.kind;
    ff.cell = f.cell;
    std::vector<int> local_order;
    for (int cell : orders.at(omega_cell)) {
      auto it = std::find(f.s_cells.begin(), f.s_cells.end(), cell);
      if (it == f.s_cells.end()) continue;
      ff.order.push_back(cell);
      local_order.push_back(static_cast<int>(it - f.s_cells.begin()));
    }
    const Increments inc = increments(f.graph, local_order);
    ff.up = inc.up;
    ff.down = inc.down;
    std::vector<std::pair<int, int>> flat;
    for (auto [c, u] : f.graph.edges) flat.emplace_back(c, f.graph.c_count + u);
    ff.b1 = betti_euler(f.graph.c_count + f.graph.u_count, flat).b1;
    int up_sum = 0;
    int down_sum = 0;
    for (std::size_t i = 0; i < ff.order.size(); ++i) {
      up_sum += ff.up[i];
      down_sum += ff.down[i];
      report.max_increment = std::max({report.max_increment, ff.up[i], ff.down[i]});
      auto& plus = f.kind == CellKind::vertex ? vertex_a_plus : edge_a_plus;
      auto& minus = f.kind == CellKind::vertex ? vertex_a_minus : edge_a_minus;
      plus[ff.order[i]] = ff.up[i];
      minus[ff.order[i]] = ff.down[i];
    }
    if (up_sum != ff.b1 || down_sum != ff.b1) {
      fail(ErrorKind::invariant, "filtration increments over " + cell_name(f.kind, f.cell) + " do not sum to b1");
    }
    if (f.kind == CellKind::edge) {
      const UpDownResult ud = updown_check(f.graph, local_order);
      for (int c : ud.good_c) ff.good_s.push_back(f.s_cells[c]);
      for (int u : ud.good_u) ff.good_gamma.push_back(f.gamma_cells[u]);
    }
    report.fibers.push_back(std::move(ff));
  };
  for (const Fiber& f : space.vertex_fibers) run(f, st.vertex_orders, space.l.vertex_map[f.cell]);
  for (const Fiber& f : space.edge_fibers) run(f, st.edge_orders, space.l.edge_map[f.cell]);

  report.chi_c = space.chi_c;
  for (int v = 0; v < inst.s.num_vertices(); ++v) {
    report.chi_c_plus += vertex_a_plus[v];
    report.chi_c_minus += vertex_a_minus[v];
  }
  for (int e = 0; e < inst.s.num_edges(); ++e) {
    report.chi_c_plus -= edge_a_plus[e];
    report.chi_c_minus -= edge_a_minus[e];
  }
  if (report.chi_c_plus != report.chi_c || report.chi_c_minus != report.chi_c) {
    fail(ErrorKind::invariant, "chi(C+) or chi(C-) differs from chi(C)");
  }
  if (circle_covering(inst).s_is_circle && report.max_increment > report.chi_c) {
    fail(ErrorKind::invariant, "filtration increment " + std::to_string(report.max_increment) + " exceeds chi(C) = " +
                                   std::to_string(report.chi_c));
  }
  return report;
}

DependenceTheoremReport verify_dependence_theorem(const AdjunctionInstance& inst, const std::optional<Stacking>& st) {
  DependenceTheoremReport report;
  const ResolvedSpace space = build(inst);
  report.di = check_diagrammatic_irreducibility(inst);
  report.covering = circle_covering(inst);
  report.indivisible = report.covering.s_is_circle && is_indivisible(inst);
  report.dependence = classify_dependence(space);
  report.chi_gamma = space.chi_gamma;
  report.degree = report.covering.degree;
  report.chi_gamma_u = space.chi_gamma_u;
  report.chi_w = space.chi_w;
  report.chi_c = space.chi_c;
  report.free_rank = betti_euler(space.gamma_u_I).b1;
  report.hypotheses_hold = report.di.holds() && report.covering.s_is_circle && report.covering.covering && report.indivisible;
  if (!report.hypotheses_hold) return report;

  for (const auto* fibers : {&space.vertex_fibers, &space.edge_fibers}) {
    for (const Fiber& f : *fibers) {
      std::vector<int> valence(f.graph.c_count, 0);
      for (auto [c, u] : f.graph.edges) ++valence[c];
      for (int k : valence) report.circle_valence_holds = report.circle_valence_holds && k == report.degree;
    }
  }

  Stacking stacking;
  if (st) {
    stacking = *st;
  } else {
    auto found = search_stacking(inst.s, inst.w, inst.omega);
    if (!found) fail(ErrorKind::invariant, "no stacking exists for an indivisible loop");
    stacking = *found;
  }
  report.filtration = filtration(inst, space, stacking);

  if (report.dependence.weakly_dependent()) {
    report.inequality_asserted = true;
    report.inequality_holds = report.lhs() <= report.chi_gamma_u;
    if (report.chi_gamma_u <= -1) {
      report.wcycles_asserted = true;
      report.wcycles_holds = report.chi_gamma + report.degree <= 0;
    }
  }
  return report;
}

}  // namespace pirank
