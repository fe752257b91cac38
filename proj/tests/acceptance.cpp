#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "pirank/adjunction.hpp"
#include "pirank/error.hpp"
#include "pirank/prank.hpp"
#include "pirank/stacking.hpp"
#include "pirank/twocomplex.hpp"
#include "pirank/whitehead.hpp"

using namespace pirank;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failures of one criterion.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

int failed_criteria = 0;

void report(int number, const std::string& summary, const Check& c) {
  const bool pass = c.failures == 0;
  if (!pass) ++failed_criteria;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << summary;
  if (!pass) std::cout << " (" << c.failures << " failures)";
  std::cout << '\n';
  for (const auto& n : c.notes) std::cout << "       " << n << '\n';
  std::cout.flush();
}

void guarded(int number, const std::string& name, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string summary = name;
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  report(number, summary, c);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

BettiEuler homology(const BipartiteGraph& b) {
  std::vector<std::pair<int, int>> edges;
  for (auto [c, u] : b.edges) edges.push_back({c, b.c_count + u});
  return betti_euler(b.c_count + b.u_count, edges);
}

int chi(const BipartiteGraph& b) {
  return b.c_count + b.u_count - static_cast<int>(b.edges.size());
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string criterion1(Check& c) {
  const auto start = Clock::now();
  for (const char* u : {"a", "b", "ab"}) {
    for (int k = 2; k <= 3; ++k) {
      const Word w = parse_word(u, Alphabet(2)).power(k);
      c.expect(primitivity_rank(w, 2).pi == 1, "pi(" + to_string(w) + ") != 1");
    }
  }
  for (const char* p : {"a", "ab", "abb", "aaab"}) {
    c.expect(!primitivity_rank(parse_word(p, Alphabet(2)), 2).pi.has_value(), std::string("pi(") + p + ") finite");
  }
  for (const char* w : {"abAB", "aabb"}) {
    const Word x = parse_word(w);
    c.expect(oracle::primitivity_rank(x, 2) == 2, std::string("oracle pi(") + w + ") != 2");
    c.expect(primitivity_rank(x, 2).pi == 2, std::string("pi(") + w + ") != 2");
  }
  int words = 0;
  for (const Word& w : oracle::word_classes(10, 3)) {
    ++words;
    const auto fast = primitivity_rank(w, 3).pi;
    const auto slow = oracle::primitivity_rank(w, 3);
    c.expect(fast == slow, to_string(w) + ": " + pi_string(fast) + " vs oracle " + pi_string(slow));
  }
  const double t = seconds_since(start);
  c.expect(t < 60.0, "took " + fmt(t) + " s");
  return "primitivity rank: examples and " + std::to_string(words) + " word classes (|w| <= 10, rank 3) agree with the partition oracle in " + fmt(t) + " s";
}

std::string criterion2(Check& c) {
  for (const char* u : {"a", "ab", "aab", "abAB", "abbAB"}) {
    const Word root = parse_word(u, Alphabet(2));
    for (int k = 2; k <= 4; ++k) {
      const auto r = primitivity_rank(root.power(k), 2);
      LabeledGraph cycle = word_to_cycle(root, Alphabet(2));
      cycle.set_base(0);
      c.expect(r.w_subgroups.size() == 1 && unbased_canonical_form(r.w_subgroups[0].graph) == unbased_canonical_form(cycle),
               "w-subgroup of " + to_string(root.power(k)) + " is not <" + u + ">");
    }
  }
  int found = 0;
  for (std::uint64_t t = 0; found < 50 && t < 100000; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(2, t);
    const Word w = fuzz::random_cyclic_word(rng, 2, 4, 10);
    const auto r = primitivity_rank(w, 2);
    if (r.pi != 2) continue;
    ++found;
    c.expect(r.w_subgroups.size() == 1 && peripheral_subgroup(r).has_value(),
             to_string(w) + " has " + std::to_string(r.w_subgroups.size()) + " w-subgroups");
  }
  c.expect(found == 50, "only " + std::to_string(found) + " words with pi = 2 drawn");
  return "w-subgroups: <u> for u^k, and one peripheral subgroup for each of " + std::to_string(found) + " random pi=2 words";
}

std::string criterion3(Check& c) {
  const auto start = Clock::now();
  int words = 0;
  for (const Word& w : oracle::word_classes(12, 3)) {
    if (maximal_root(w).exponent > 1) continue;
    ++words;
    const auto st = search_stacking(w, 3);
    c.expect(st.has_value() && verify_stacking(w, 3, *st), "no verified stacking for " + to_string(w));
  }
  const std::string figure = "uuvuvvUUVUVV";
  std::string renamed = figure;
  for (char& ch : renamed) ch = ch == 'u' ? 'a' : ch == 'v' ? 'b' : ch == 'U' ? 'A' : 'B';
  const Word fw = parse_word(renamed);
  c.expect(verify_stacking(fw, 2, find_stacking(fw, 2)), "figure word " + figure);
  int powers = 0;
  for (const Word& v : oracle::word_classes(4, 3)) {
    for (int k = 2; k <= 3; ++k) {
      ++powers;
      c.expect(!search_stacking(v.power(k), 3).has_value(), "stacking found for " + to_string(v.power(k)));
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 120.0, "took " + fmt(t) + " s");
  return "stackings: " + std::to_string(words) + " indivisible classes (|w| <= 12, rank 3) and " + figure +
         " verified; none for " + std::to_string(powers) + " powers v^2, v^3 (|v| <= 4); " + fmt(t) + " s";
}

std::string criterion4(Check& c) {
  const fuzz::FuzzSummary s = fuzz::run_fuzz("dependence", 4, 1000);
  c.expect(s.checked == 1000, std::to_string(s.checked) + " instances checked");
  c.expect(s.violations == 0, std::to_string(s.violations) + " violations: " + s.first_violation);
  const DependenceTheoremReport b = verify_dependence_theorem(borromean_instance());
  c.expect(b.hypotheses_hold && b.inequality_asserted, "Borromean hypotheses");
  c.expect(b.lhs() == -1 && b.chi_gamma_u == -1, "Borromean " + std::to_string(b.lhs()) + " <= " + std::to_string(b.chi_gamma_u));
  c.expect(b.free_rank == 2, "Borromean free image rank " + std::to_string(b.free_rank));
  return "dependence inequality: " + std::to_string(s.checked) + " weakly dependent instances, " +
         std::to_string(s.violations) + " violations, " + std::to_string(s.equality) +
         " equality cases; Borromean -1 <= -1 with free image of rank " + std::to_string(b.free_rank);
}

void check_instance(Check& c, const AdjunctionInstance& inst, const std::string& tag) {
  const ResolvedSpace space = build(inst);
  c.expect(space.chi_w == space.chi_gamma + space.chi_s - space.chi_p, tag + ": chi(W) from the square");
  int fibers = 0;
  for (const Fiber& f : space.vertex_fibers) fibers += chi(f.graph);
  for (const Fiber& f : space.edge_fibers) fibers -= chi(f.graph);
  c.expect(space.chi_w == fibers, tag + ": chi(W) from the fibers");

  const DependenceTheoremReport r = verify_dependence_theorem(inst);
  c.expect(r.filtration.has_value(), tag + ": no filtration");
  if (!r.filtration) return;
  const FiltrationReport& fr = *r.filtration;
  c.expect(fr.chi_c == fr.chi_c_plus && fr.chi_c == fr.chi_c_minus,
           tag + ": chi(C) " + std::to_string(fr.chi_c) + " " + std::to_string(fr.chi_c_plus) + " " + std::to_string(fr.chi_c_minus));
  for (const FiberFiltration& ff : fr.fibers) {
    const Fiber& f = ff.kind == CellKind::vertex ? space.vertex_fibers[ff.cell] : space.edge_fibers[ff.cell];
    const int b1 = homology(f.graph).b1;
    c.expect(sum(ff.up) == b1 && sum(ff.down) == b1, tag + ": increments do not sum to b1");
    for (int d : ff.up) c.expect(d <= fr.chi_c, tag + ": up increment above chi(C)");
    for (int d : ff.down) c.expect(d <= fr.chi_c, tag + ": down increment above chi(C)");
  }
  std::vector<int> valence(inst.s.num_vertices(), 0);
  for (int v : inst.sigma.vertex_map) ++valence[v];
  for (int v = 0; v < inst.s.num_vertices(); ++v) {
    c.expect(valence[v] == r.degree, tag + ": valence of s" + std::to_string(v));
  }
  c.expect(r.circle_valence_holds, tag + ": circle valence");
}

std::string criterion5(Check& c) {
  int checked = 0;
  std::uint64_t draws = 0;
  for (std::uint64_t t = 0; checked < 1000; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(5, t);
    fuzz::DependenceLimits limits;
    limits.total_degree = 1 + static_cast<int>(t % 4);
    std::optional<AdjunctionInstance> inst;
    while (!inst) {
      ++draws;
      inst = fuzz::draw_weakly_dependent(rng, limits);
    }
    check_instance(c, *inst, "trial " + std::to_string(t));
    ++checked;
  }
  check_instance(c, borromean_instance(), "Borromean");
  return "invariants: chi(W) three ways, chi(C) = chi(C+) = chi(C-), fiber increments and circle valence on " +
         std::to_string(checked) + " instances (" + std::to_string(draws) + " draws)";
}

std::string criterion6(Check& c) {
  const fuzz::FuzzSummary s = fuzz::run_fuzz("updown", 6, 1000);
  c.expect(s.checked == 1000 && s.violations == 0, std::to_string(s.violations) + " violations: " + s.first_violation);
  BipartiteGraph b;
  b.c_count = 6;
  b.u_count = 6;
  const std::vector<std::vector<int>> stars{{0, 1}, {2, 3}, {0, 1, 2, 3}, {4, 0, 1, 2}, {0, 3}, {5, 0, 1, 2}};
  for (int i = 0; i < 6; ++i) {
    for (int u : stars[i]) b.edges.push_back({i, u});
  }
  const BettiEuler h = homology(b);
  c.expect(h.chi == -6 && h.b1 == 7, "figure instance has chi " + std::to_string(h.chi) + ", b1 " + std::to_string(h.b1));
  const std::vector<int> order{0, 1, 2, 3, 4, 5};
  const UpDownResult r = updown_check(b, order);
  c.expect(r.increments.up == std::vector<int>{0, 0, 2, 2, 1, 2}, "figure increments differ");
  return "up-down lemma: " + std::to_string(s.checked) + " random bipartite graphs with >= 2 good vertices (" +
         std::to_string(s.equality) + " with exactly two); figure pattern 0,0,2,2,1,2 with chi -6, b1 7";
}

// Calls visit on every quotient of the covering circles: each vertex
// partition in restricted growth order, then each choice of edge merges.
void all_quotients(const fuzz::Circles& circles,
                   const std::function<void(const fuzz::CircleQuotient&)>& visit) {
  const int n = circles.p.num_vertices();
  std::vector<int> classes(n, 0);
  std::function<void(int, int)> partition = [&](int v, int used) {
    if (v == n) {
      std::vector<int> prefix;
      while (true) {
        std::vector<int> options;
        std::size_t call = 0;
        const auto q = fuzz::quotient(circles, classes, [&](int, const std::vector<int>& candidates) {
          const int choice = call < prefix.size() ? prefix[call] : 0;
          ++call;
          options.push_back(static_cast<int>(candidates.size()) + 1);
          return choice == 0 ? -1 : candidates[static_cast<std::size_t>(choice - 1)];
        });
        visit(q);
        prefix.resize(options.size(), 0);
        int i = static_cast<int>(prefix.size()) - 1;
        while (i >= 0 && prefix[i] + 1 >= options[i]) --i;
        if (i < 0) break;
        ++prefix[i];
        prefix.resize(static_cast<std::size_t>(i) + 1);
      }
      return;
    }
    for (int k = 0; k <= used && k < n; ++k) {
      classes[v] = k;
      partition(v + 1, std::max(used, k + 1));
    }
  };
  partition(0, 0);
}

std::string criterion7(Check& c) {
  const std::vector<std::pair<std::string, std::vector<std::vector<int>>>> family{
      {"aab", {{1}, {1, 1}, {1, 1, 1}, {2}, {2, 1}}},
      {"abAB", {{1}, {1, 1}, {2}}},
  };
  int complexes = 0;
  for (const auto& [relator, degree_lists] : family) {
    const Word w = parse_word(relator);
    for (const auto& degrees : degree_lists) {
      const fuzz::Circles circles = fuzz::covering_circles(w, 2, degrees);
      all_quotients(circles, [&](const fuzz::CircleQuotient& q) {
        if (q.gamma.num_edges() > 6) return;
        if (betti_euler(q.gamma).components != 1) return;
        const BranchedMap f = fuzz::circle_branched_map(w, 2, circles, q, degrees);
        if (!branched_map_defect(f.domain, f.codomain, f.map).empty()) return;
        ++complexes;
        const AdjunctionInstance inst = adjunction_of(f);
        const oracle::Poset poset = oracle::one_relator_poset(inst);
        const std::string tag = relator + " " + to_text(f.domain);
        c.expect(poset.finest >= 0, "no unique finest object for " + tag);
        if (poset.finest < 0) return;
        const ResolvedSpace space = build(inst);
        std::vector<int> vertex = space.gamma_to_u.vertex_map;
        vertex.insert(vertex.end(), space.s_to_u.vertex_map.begin(), space.s_to_u.vertex_map.end());
        std::vector<int> edge = space.gamma_to_u.edge_map;
        edge.insert(edge.end(), space.s_to_u.edge_map.begin(), space.s_to_u.edge_map.end());
        const auto& finest = poset.objects[static_cast<std::size_t>(poset.finest)];
        c.expect(oracle::same_partition(finest.vertex, vertex) && oracle::same_partition(finest.edge, edge),
                 "finest object differs from the pushout for " + tag);
        c.expect(!pushout_inequality(f).violated(), "pushout inequality fails for " + tag);
      });
    }
  }
  const fuzz::FuzzSummary s = fuzz::run_fuzz("pushout", 7, 500);
  c.expect(s.checked == 500 && s.asserted == 500, std::to_string(s.asserted) + " asserted of " + std::to_string(s.checked));
  c.expect(s.violations == 0, std::to_string(s.violations) + " violations: " + s.first_violation);

  BranchedMap id;
  id.codomain = one_relator_complex(parse_word("aab"), 2);
  id.domain = id.codomain;
  id.map.skeleton = identity_morphism(id.domain.skeleton);
  id.map.face_target = {0};
  id.map.face_offset = {0};
  id.map.degree = {1};
  const PushoutInequalityReport tight = pushout_inequality(id);
  c.expect(tight.asserted && tight.chi_y + tight.branching == tight.chi_y_hat, "identity case is not tight");
  return "pushout: poset oracle has a unique finest object equal to the pushout on " + std::to_string(complexes) +
         " complexes (<= 3 faces, <= 6 edges); inequality on " + std::to_string(s.asserted) + " fuzzed maps (" +
         std::to_string(s.equality) + " tight); identity tight";
}

std::string criterion8(Check& c) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Word> images;
    Word b_power;
    for (int i = 0; i < n; ++i) {
      images.push_back(b_power * parse_word("a") * b_power.inverse());
      b_power = b_power * parse_word("b");
    }
    const int k = abelianization_kernel_rank(images, Alphabet(2));
    c.expect(k == n - 1, "n = " + std::to_string(n) + ": kernel rank " + std::to_string(k));
  }
  return "abelianization kernel of <a, bab^-1, ..., b^(n-1)ab^(1-n)> has rank n-1 for n = 2..6";
}

std::string criterion9(Check& c) {
  const Word torus_word = parse_word("abAB");
  const TwoComplex torus = one_relator_complex(torus_word, 2);
  const auto torus_pr = primitivity_rank(torus_word, 2);
  std::vector<TwoComplex> covers{torus};
  const std::vector<int> id{0, 1}, swap{1, 0};
  for (const auto& a : {id, swap}) {
    for (const auto& b : {id, swap}) {
      if (a == id && b == id) continue;
      covers.push_back(finite_cover(torus_word, 2, {a, b}));
    }
  }
  std::map<std::string, int> kinds;
  for (const TwoComplex& y : covers) {
    const ClassificationResult r = classify_immersion(branched_map_by_labels(y, torus), torus_pr);
    ++kinds[to_string(r.kind)];
    c.expect(r.kind != Classification::boundary_case_violation, "torus cover: " + r.detail);
    c.expect(nielsen_reduces_to_graph(y) == (r.kind == Classification::reduces_to_graph), "torus cover: Nielsen cross-check");
  }

  std::optional<Word> w3;
  for (int length = 1; length <= 12 && !w3; ++length) {
    for (const Word& w : oracle::word_classes(length, 3)) {
      if (static_cast<int>(w.size()) != length) continue;
      if (primitivity_rank(w, 3).pi == 3) {
        w3 = w;
        break;
      }
    }
  }
  c.expect(w3.has_value(), "no relator with pi = 3 up to length 12");
  if (!w3) return "classification";
  const auto pr = primitivity_rank(*w3, 3);
  int nonnegative = 0;
  std::map<std::string, int> classified;
  for (std::uint64_t t = 0; t < 2000; ++t) {
    fuzz::Rng rng = fuzz::trial_rng(9, t);
    const auto f = fuzz::draw_immersion(rng, *w3, 3);
    if (!f) continue;
    if (f->domain.euler_characteristic() >= 0) {
      ++nonnegative;
      c.expect(nielsen_reduces_to_graph(f->domain), "immersed complex with chi >= 0 does not reduce:\n" + to_text(f->domain));
    }
    try {
      const ClassificationResult r = classify_immersion(*f, pr);
      ++classified[to_string(r.kind)];
      c.expect(r.kind != Classification::boundary_case_violation, r.detail + "\n" + to_text(f->domain));
      if (f->domain.euler_characteristic() >= 0) {
        c.expect(r.kind == Classification::reduces_to_graph, "chi >= 0 classified as " + to_string(r.kind));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::precondition) throw;
    }
  }
  c.expect(nonnegative > 0, "no immersed complex with chi >= 0 drawn");
  std::ostringstream s;
  s << "classification: torus and " << covers.size() - 1 << " double covers give";
  for (const auto& [k, n] : kinds) s << ' ' << n << ' ' << k;
  s << "; pi=3 relator " << to_string(*w3) << ": " << nonnegative << " immersed complexes with chi >= 0 reduce to graphs;"
    << " classified without free faces:";
  if (classified.empty()) s << " none";
  for (const auto& [k, n] : classified) s << ' ' << n << ' ' << k;
  return s.str();
}

}  // namespace

int main() {
  const auto start = Clock::now();
  guarded(1, "primitivity rank", criterion1);
  guarded(2, "w-subgroups", criterion2);
  guarded(3, "stackings", criterion3);
  guarded(4, "dependence inequality", criterion4);
  guarded(5, "invariants", criterion5);
  guarded(6, "up-down lemma", criterion6);
  guarded(7, "pushout", criterion7);
  guarded(8, "abelianization kernel", criterion8);
  guarded(9, "classification", criterion9);
  std::cout << (failed_criteria == 0 ? "all criteria pass" : std::to_string(failed_criteria) + " criteria fail") << " in "
            << fmt(seconds_since(start)) << " s\n";
  return failed_criteria == 0 ? 0 : 1;
}
