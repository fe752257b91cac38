#include "fuzz.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pirank/error.hpp"
#include "pirank/union_find.hpp"

namespace pirank::fuzz {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Total degree is 1 only one time in ten: degree one instances are rigid
// (P is a copy of S) and would otherwise dominate.
std::vector<int> random_degrees(Rng& rng, int max_total, int max_part, int max_parts) {
  const int total = coin(rng, 0.1) ? 1 : uniform(rng, std::min(2, max_total), max_total);
  std::vector<int> degrees;
  int left = total;
  while (left > 0) {
    const int d = static_cast<int>(degrees.size()) + 1 == max_parts ? left : uniform(rng, 1, std::min(max_part, left));
    degrees.push_back(d);
    left -= d;
  }
  return degrees;
}

std::vector<int> random_composition(Rng& rng, int total) {
  std::vector<int> parts;
  for (int left = total; left > 0;) {
    parts.push_back(uniform(rng, 1, left));
    left -= parts.back();
  }
  return parts;
}

bool connected(const LabeledGraph& g) { return g.num_vertices() > 0 && betti_euler(g).components == 1; }

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Word random_cyclic_word(Rng& rng, int rank, int min_length, int max_length) {
  const auto letters = Alphabet(rank).letters();
  for (;;) {
    const int n = uniform(rng, min_length, max_length);
    std::vector<Letter> x;
    while (static_cast<int>(x.size()) < n) {
      const Letter l = letters[uniform(rng, 0, static_cast<int>(letters.size()) - 1)];
      if (x.empty() || l != -x.back()) x.push_back(l);
    }
    const Word w = Word::reduce(x);
    if (!w.empty() && w.is_cyclically_reduced()) return w;
  }
}

Word random_indivisible_word(Rng& rng, int rank, int min_length, int max_length) {
  for (;;) {
    Word w = random_cyclic_word(rng, rank, min_length, max_length);
    if (maximal_root(w).exponent == 1) return w;
  }
}

Circles covering_circles(const Word& w, int rank, const std::vector<int>& degrees) {
  (void)rank;
  const int len = static_cast<int>(w.size());
  Circles c;
  for (int d : degrees) {
    const int n = d * len;
    const int base = c.p.num_vertices();
    c.first_edge.push_back(c.p.num_edges());
    c.length.push_back(n);
    for (int k = 0; k < n; ++k) {
      c.p.add_vertex();
      c.vertex_position.push_back(k % len);
    }
    for (int k = 0; k < n; ++k) {
      const Letter x = w[k % len];
      const int from = base + k;
      const int to = base + (k + 1) % n;
      if (x > 0) {
        c.p.add_edge(from, to, x);
      } else {
        c.p.add_edge(to, from, -x);
      }
      c.edge_position.push_back(k % len);
    }
  }
  return c;
}

std::vector<int> random_vertex_classes(Rng& rng, int n) {
  std::vector<int> label(n);
  if (coin(rng, 0.5)) {
    UnionFind uf(n);
    const int merges = n > 1 ? uniform(rng, 0, n - 1) : 0;
    for (int i = 0; i < merges; ++i) uf.unite(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    uf.classes(label);
  } else {
    const int m = uniform(rng, 1, std::max(1, std::min(n, 6)));
    for (int& x : label) x = uniform(rng, 0, m - 1);
  }
  return label;
}

CircleQuotient quotient(const Circles& c, const std::vector<int>& vertex_class, const EdgePolicy& policy) {
  CircleQuotient q;
  std::map<int, int> vertex_of;
  for (int v = 0; v < c.p.num_vertices(); ++v) {
    auto [it, fresh] = vertex_of.emplace(vertex_class[v], q.gamma.num_vertices());
    if (fresh) q.gamma.add_vertex();
    q.lambda.vertex_map.push_back(it->second);
  }
  for (int e = 0; e < c.p.num_edges(); ++e) {
    const Edge& pe = c.p.edge(e);
    const int from = q.lambda.vertex_map[pe.from];
    const int to = q.lambda.vertex_map[pe.to];
    std::vector<int> candidates;
    for (int g = 0; g < q.gamma.num_edges(); ++g) {
      const Edge& ge = q.gamma.edge(g);
      if (ge.label == pe.label && ge.from == from && ge.to == to) candidates.push_back(g);
    }
    int chosen = policy(e, candidates);
    if (chosen < 0) chosen = q.gamma.add_edge(from, to, pe.label);
    q.lambda.edge_map.push_back(chosen);
  }
  return q;
}

AdjunctionInstance circle_instance(const Word& w, int rank, const Circles& c, const CircleQuotient& q) {
  AdjunctionInstance inst;
  inst.omega = rose(rank);
  inst.gamma = q.gamma;
  inst.h = morphism_to_rose(q.gamma);
  inst.s = word_to_cycle(w, Alphabet(rank));
  inst.w = morphism_to_rose(inst.s);
  inst.p = c.p;
  inst.lambda = q.lambda;
  inst.sigma.vertex_map = c.vertex_position;
  inst.sigma.edge_map = c.edge_position;
  validate(inst);
  return inst;
}

BranchedMap circle_branched_map(const Word& w, int rank, const Circles& c, const CircleQuotient& q,
                                const std::vector<int>& degrees) {
  BranchedMap f;
  f.codomain = one_relator_complex(w, rank);
  f.domain.skeleton = q.gamma;
  for (std::size_t i = 0; i < c.first_edge.size(); ++i) {
    std::vector<Step> path;
    for (int k = 0; k < c.length[i]; ++k) {
      const int e = c.first_edge[i] + k;
      const int g = q.lambda.edge_map[e];
      path.push_back(w[k % w.size()] > 0 ? g : reverse_step(g));
    }
    f.domain.faces.push_back(std::move(path));
    f.map.face_target.push_back(0);
    f.map.face_offset.push_back(0);
    f.map.degree.push_back(degrees[i]);
  }
  f.map.skeleton = morphism_to_rose(q.gamma);
  return f;
}

std::optional<AdjunctionInstance> draw_weakly_dependent(Rng& rng, const DependenceLimits& limits) {
  const Word w = random_indivisible_word(rng, limits.rank, 2, limits.max_s);
  auto degrees = random_degrees(rng, limits.max_degree, limits.max_degree, limits.max_degree);
  if (limits.total_degree > 0) degrees = random_composition(rng, limits.total_degree);
  const Circles c = covering_circles(w, limits.rank, degrees);
  const auto classes = random_vertex_classes(rng, c.p.num_vertices());
  // Gamma edge -> S edges already over it; one P edge per pair keeps rho injective.
  std::vector<std::set<int>> over;
  const double merge = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
  const CircleQuotient q = quotient(c, classes, [&](int e, const std::vector<int>& candidates) {
    std::vector<int> open;
    for (int g : candidates) {
      if (!over[g].contains(c.edge_position[e])) open.push_back(g);
    }
    int chosen = -1;
    if (!open.empty() && coin(rng, merge)) chosen = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
    if (chosen < 0) over.emplace_back();
    over[chosen < 0 ? over.size() - 1 : chosen].insert(c.edge_position[e]);
    return chosen;
  });
  if (q.gamma.num_edges() > limits.max_gamma_edges) return std::nullopt;
  AdjunctionInstance inst = circle_instance(w, limits.rank, c, q);
  if (!check_diagrammatic_irreducibility(inst).holds()) return std::nullopt;
  if (!classify_dependence(build(inst)).weakly_dependent()) return std::nullopt;
  return inst;
}

BipartiteGraph random_bipartite(Rng& rng, int max_side) {
  BipartiteGraph b;
  b.c_count = uniform(rng, 1, max_side);
  b.u_count = uniform(rng, 1, max_side);
  std::set<std::pair<int, int>> edges{{0, 0}};
  // Spanning tree: c0 - u0 first, then each vertex joins a placed vertex of the other side.
  std::vector<int> rest;
  for (int c = 1; c < b.c_count; ++c) rest.push_back(c);
  for (int u = 1; u < b.u_count; ++u) rest.push_back(b.c_count + u);
  std::shuffle(rest.begin(), rest.end(), rng);
  std::vector<int> placed_c{0};
  std::vector<int> placed_u{0};
  for (int v : rest) {
    if (v < b.c_count) {
      edges.insert({v, placed_u[uniform(rng, 0, static_cast<int>(placed_u.size()) - 1)]});
      placed_c.push_back(v);
    } else {
      edges.insert({placed_c[uniform(rng, 0, static_cast<int>(placed_c.size()) - 1)], v - b.c_count});
      placed_u.push_back(v - b.c_count);
    }
  }
  const int extra = uniform(rng, 0, b.c_count * b.u_count / 2);
  for (int i = 0; i < extra; ++i) edges.insert({uniform(rng, 0, b.c_count - 1), uniform(rng, 0, b.u_count - 1)});
  b.edges.assign(edges.begin(), edges.end());
  return b;
}

std::vector<int> random_order(Rng& rng, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::optional<BranchedMap> draw_branched_map(Rng& rng, int rank, int max_length, int max_degree, int total_degree) {
  const Word w = random_indivisible_word(rng, rank, 2, max_length);
  auto degrees = random_degrees(rng, max_degree, 3, 3);
  if (total_degree > 0) {
    do {
      degrees = random_composition(rng, total_degree);
    } while (degrees.size() > 3);
  }
  const Circles c = covering_circles(w, rank, degrees);
  const auto classes = random_vertex_classes(rng, c.p.num_vertices());
  const double merge = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
  const CircleQuotient q = quotient(c, classes, [&](int, const std::vector<int>& candidates) {
    return !candidates.empty() && coin(rng, merge) ? candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)] : -1;
  });
  if (!connected(q.gamma)) return std::nullopt;
  BranchedMap f = circle_branched_map(w, rank, c, q, degrees);
  if (!branched_map_defect(f.domain, f.codomain, f.map).empty()) return std::nullopt;
  return f;
}

std::optional<BranchedMap> draw_immersion(Rng& rng, const Word& w, int rank) {
  const std::vector<int> degrees(uniform(rng, 1, 3), 1);
  const Circles c = covering_circles(w, rank, degrees);
  const auto classes = random_vertex_classes(rng, c.p.num_vertices());
  const double merge = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const CircleQuotient q = quotient(c, classes, [&](int, const std::vector<int>& candidates) {
    return !candidates.empty() && coin(rng, merge) ? candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)] : -1;
  });
  if (!connected(q.gamma)) return std::nullopt;
  const BranchedMap f = circle_branched_map(w, rank, c, q, degrees);
  ComplexFolding folded = fold_complex_map(f.domain, f.codomain, f.map);
  return BranchedMap{std::move(folded.z), f.codomain, std::move(folded.back)};
}

namespace {

template <class Draw>
auto draw_until(Rng& rng, std::uint64_t max_draws, std::uint64_t& draws, Draw&& draw) {
  for (std::uint64_t i = 0; i < max_draws; ++i) {
    ++draws;
    if (auto x = draw(rng)) return *x;
  }
  fail(ErrorKind::budget, "fuzz: no admissible instance in " + std::to_string(max_draws) + " draws");
}

void record_violation(FuzzSummary& s, int trial, const std::string& what) {
  ++s.violations;
  if (s.first_violation.empty()) s.first_violation = "trial " + std::to_string(trial) + ": " + what;
}

}  // namespace

FuzzSummary run_fuzz(const std::string& kind, std::uint64_t seed, int trials, std::uint64_t max_draws) {
  FuzzSummary s;
  s.kind = kind;
  s.seed = seed;
  s.trials = trials;
  if (kind != "dependence" && kind != "updown" && kind != "pushout") {
    fail(ErrorKind::malformed_input, "unknown fuzz kind '" + kind + "' (dependence, updown, pushout)");
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    try {
      if (kind == "dependence") {
        DependenceLimits limits;
        limits.total_degree = coin(rng, 0.1) ? 1 : uniform(rng, 2, limits.max_degree);
        const AdjunctionInstance inst =
            draw_until(rng, max_draws, s.draws, [&](Rng& r) { return draw_weakly_dependent(r, limits); });
        const DependenceTheoremReport r = verify_dependence_theorem(inst);
        ++s.checked;
        if (!r.hypotheses_hold) {
          record_violation(s, t, "the generator produced an instance outside the hypotheses");
          continue;
        }
        s.asserted += r.inequality_asserted ? 1 : 0;
        s.equality += r.inequality_asserted && r.lhs() == r.chi_gamma_u ? 1 : 0;
        if (r.violated()) {
          record_violation(s, t, std::to_string(r.lhs()) + " <= " + std::to_string(r.chi_gamma_u) + " fails\n" + to_text(inst));
        }
      } else if (kind == "updown") {
        const BipartiteGraph b = random_bipartite(rng, 12);
        const auto order = random_order(rng, b.c_count);
        ++s.draws;
        const UpDownResult r = updown_check(b, order);
        ++s.checked;
        ++s.asserted;
        if (r.good_c.size() + r.good_u.size() == 2) ++s.equality;
      } else {
        // Only maps whose boundary misses part of the relator count.
        const int total = coin(rng, 0.1) ? 1 : uniform(rng, 2, 4);
        const BranchedMap f = draw_until(rng, max_draws, s.draws, [&](Rng& r) -> std::optional<BranchedMap> {
          auto f = draw_branched_map(r, 2, 6, 4, total);
          if (f && !pushout_inequality(*f).asserted) f.reset();
          return f;
        });
        const PushoutInequalityReport r = pushout_inequality(f);
        ++s.checked;
        s.asserted += r.asserted ? 1 : 0;
        s.equality += r.asserted && r.chi_y + r.branching == r.chi_y_hat ? 1 : 0;
        if (r.violated()) record_violation(s, t, "pushout inequality fails\n" + to_text(f));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::invariant) throw;
      ++s.checked;
      record_violation(s, t, e.what());
    }
  }
  return s;
}

}  // namespace pirank::fuzz
