#include "report.hpp"

#include <sstream>

namespace pirank::report {

namespace {

const char* mark(bool b) { return b ? "pass" : "fail"; }

std::string presentation(const Presentation& p) {
  std::string out = "<";
  for (int i = 1; i <= p.rank; ++i) {
    if (i > 1) out += ", ";
    out += letter_name(i);
  }
  return out + " | " + to_string(p.relator) + ">";
}

json cells(const std::vector<int>& v) { return json(v); }

}  // namespace

json checklist_json(const std::vector<Hypothesis>& items) {
  json out = json::array();
  for (const auto& h : items) out.push_back({{"name", h.name}, {"holds", h.holds}});
  return out;
}

std::string checklist_text(const std::vector<Hypothesis>& items) {
  std::string out = "hypotheses:";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? ", " : " ") + items[i].name + " " + mark(items[i].holds);
  }
  return out + '\n';
}

std::string generators(const LabeledGraph& g) {
  const Basis basis = spanning_tree_basis(g);
  std::string out = "<";
  for (std::size_t i = 0; i < basis.generator_words.size(); ++i) {
    if (i) out += ", ";
    out += to_string(basis.generator_words[i]);
  }
  return out + ">";
}

json rank_json(const PrimitivityRankReport& r, int rank) {
  json subgroups = json::array();
  for (const WSubgroup& s : r.w_subgroups) {
    subgroups.push_back({{"rank", s.rank},
                         {"generators", generators(s.graph)},
                         {"w_in_basis", to_string(s.w_in_basis)},
                         {"presentation", presentation(s.presentation)},
                         {"graph", to_text(s.graph)}});
  }
  const bool trivial = r.trivial;
  return {{"command", "rank"},
          {"word", to_string(r.conjugator * r.core * r.conjugator.inverse())},
          {"rank", rank},
          {"core", to_string(r.core)},
          {"pi", r.pi ? json(*r.pi) : json(nullptr)},
          {"verdict", to_string(negative_immersions_verdict(r))},
          {"proper_power", r.proper_power},
          {"primitive", r.primitive},
          {"hypotheses", checklist_json({{"nontrivial", !trivial}})},
          {"quotients_examined", r.quotients},
          {"w_subgroups", subgroups}};
}

std::string rank_text(const PrimitivityRankReport& r, int rank) {
  (void)rank;
  std::ostringstream out;
  out << "pi=" << pi_string(r.pi) << ", verdict=" << to_string(negative_immersions_verdict(r));
  if (r.pi == 1 && r.w_subgroups.size() == 1) {
    out << ", w-subgroup " << generators(r.w_subgroups[0].graph);
  } else if (r.pi == 2 && r.w_subgroups.size() == 1) {
    out << ", unique peripheral subgroup " << generators(r.w_subgroups[0].graph);
  } else if (r.pi) {
    out << ", " << r.w_subgroups.size() << " w-subgroups";
  }
  out << '\n';
  for (std::size_t i = 0; i < r.w_subgroups.size(); ++i) {
    const WSubgroup& s = r.w_subgroups[i];
    out << "w-subgroup " << i << ": " << generators(s.graph) << ", w = " << to_string(s.w_in_basis)
        << ", presentation " << presentation(s.presentation) << '\n'
        << to_text(s.graph);
  }
  return out.str();
}

std::vector<Hypothesis> stacking_hypotheses(const Word& w) {
  const bool cyclic = !w.empty() && w.is_cyclically_reduced();
  return {{"cyclically reduced", cyclic}, {"indivisible", cyclic && maximal_root(w).exponent == 1}};
}

json stacking_json(const Word& w, int rank, const Stacking& st) {
  json vertices = json::object();
  json edges = json::object();
  for (const auto& [cell, order] : st.vertex_orders) vertices["v" + std::to_string(cell)] = cells(order);
  for (const auto& [cell, order] : st.edge_orders) edges[std::string(1, letter_name(cell + 1))] = cells(order);
  return {{"command", "stack"},
          {"word", to_string(w)},
          {"rank", rank},
          {"hypotheses", checklist_json(stacking_hypotheses(w))},
          {"verified", verify_stacking(w, rank, st)},
          {"vertex_orders", vertices},
          {"edge_orders", edges}};
}

std::string stacking_text(const Word& w, int rank, const Stacking& st) {
  std::ostringstream out;
  out << "stacking of " << to_string(w) << " over rank " << rank << " ("
      << (verify_stacking(w, rank, st) ? "verified" : "NOT VERIFIED") << ")\n"
      << to_text(st, rose(rank));
  return out.str();
}

std::vector<Hypothesis> dependence_hypotheses(const DependenceTheoremReport& r) {
  return {{"DI", r.di.holds()},
          {"circle", r.covering.s_is_circle},
          {"indivisible", r.indivisible},
          {"covering", r.covering.covering}};
}

namespace {

std::string dependence_kind(const DependenceReport& d) {
  if (!d.independent) return "dependent";
  if (d.weakly_dependent()) return "weakly dependent";
  return "strongly independent";
}

}  // namespace

json dependence_json(const DependenceTheoremReport& r) {
  json out = {{"command", "verify"},
              {"hypotheses", checklist_json(dependence_hypotheses(r))},
              {"di_witness", r.di.witness},
              {"dependence", dependence_kind(r.dependence)},
              {"thin_edges", r.dependence.thin_edges},
              {"chi_gamma", r.chi_gamma},
              {"degree", r.degree},
              {"chi_gamma_u", r.chi_gamma_u},
              {"chi_w", r.chi_w},
              {"chi_c", r.chi_c},
              {"free_rank", r.free_rank},
              {"inequality", {{"asserted", r.inequality_asserted}, {"lhs", r.lhs()}, {"rhs", r.chi_gamma_u}, {"holds", r.inequality_holds}}},
              {"wcycles", {{"asserted", r.wcycles_asserted}, {"lhs", r.chi_gamma + r.degree}, {"rhs", 0}, {"holds", r.wcycles_holds}}},
              {"circle_valence_holds", r.circle_valence_holds}};
  if (r.filtration) {
    json fibers = json::array();
    for (const FiberFiltration& f : r.filtration->fibers) {
      fibers.push_back({{"cell", (f.kind == CellKind::vertex ? "v" : "e") + std::to_string(f.cell)},
                        {"order", f.order},
                        {"up", f.up},
                        {"down", f.down},
                        {"b1", f.b1},
                        {"good_s", f.good_s},
                        {"good_gamma", f.good_gamma}});
    }
    out["filtration"] = {{"chi_c", r.filtration->chi_c},
                         {"chi_c_plus", r.filtration->chi_c_plus},
                         {"chi_c_minus", r.filtration->chi_c_minus},
                         {"max_increment", r.filtration->max_increment},
                         {"fibers", fibers}};
  }
  return out;
}

std::string dependence_text(const DependenceTheoremReport& r) {
  std::ostringstream out;
  out << checklist_text(dependence_hypotheses(r));
  if (!r.di.holds()) out << "not diagrammatically irreducible: " << r.di.witness << '\n';
  out << "chi(Gamma)=" << r.chi_gamma << " deg(sigma)=" << r.degree << " chi(Gamma_u)=" << r.chi_gamma_u
      << " chi(W)=" << r.chi_w << " chi(C)=" << r.chi_c << " rank(Gamma_u^I)=" << r.free_rank << '\n';
  if (!r.hypotheses_hold) {
    out << "hypotheses fail; the inequality is not asserted\n";
    return out.str();
  }
  out << "dependence: " << dependence_kind(r.dependence) << '\n';
  if (r.inequality_asserted) {
    out << "weakly dependent: " << r.lhs() << " <= " << r.chi_gamma_u << (r.inequality_holds ? " OK" : " VIOLATED") << '\n';
  } else {
    out << "strongly independent: inequality not asserted\n";
  }
  if (r.wcycles_asserted) {
    out << "chi(Gamma)+deg(sigma) = " << r.chi_gamma + r.degree << " <= 0" << (r.wcycles_holds ? " OK" : " VIOLATED") << '\n';
  }
  if (!r.circle_valence_holds) out << "circle valence VIOLATED\n";
  if (r.filtration) {
    out << "chi(C)=" << r.filtration->chi_c << " chi(C+)=" << r.filtration->chi_c_plus << " chi(C-)="
        << r.filtration->chi_c_minus << " max increment " << r.filtration->max_increment << '\n';
  }
  return out.str();
}

std::vector<Hypothesis> pushout_hypotheses(const PushoutInequalityReport& r) {
  return {{"branched", true}, {"indivisible", r.relator_indivisible}, {"not two-to-one", !r.two_to_one}};
}

json pushout_json(const PushoutInequalityReport& r, const PushoutResult* p) {
  json out = {{"command", "pushout"},
              {"hypotheses", checklist_json(pushout_hypotheses(r))},
              {"relator_root", to_string(r.relator_root)},
              {"coverage", r.coverage},
              {"chi_y", r.chi_y},
              {"branching", r.branching},
              {"chi_y_hat", r.chi_y_hat},
              {"chi_y_hat_I", r.chi_y_hat_I},
              {"inequality", {{"asserted", r.asserted}, {"lhs", r.chi_y + r.branching}, {"rhs", r.chi_y_hat}, {"holds", r.holds}}},
              {"immersion_inequality",
               {{"asserted", r.immersion_case}, {"lhs", r.chi_y}, {"rhs", r.chi_y_hat}, {"holds", r.immersion_holds}}}};
  if (p) {
    out["y_hat"] = to_text(p->y_hat);
    out["y_hat_I"] = to_text(p->y_hat_I);
    out["degenerate"] = p->degenerate;
  }
  return out;
}

std::string pushout_text(const PushoutInequalityReport& r, const PushoutResult* p) {
  std::ostringstream out;
  out << checklist_text(pushout_hypotheses(r));
  if (!r.relator_indivisible) {
    out << "relator is a proper power of " << to_string(r.relator_root) << "; pass to the complex of the root\n";
    return out.str();
  }
  if (p) {
    if (p->degenerate) out << "Y has no faces; the pushout is its skeleton\n";
    out << "Y_hat:\n" << to_text(p->y_hat) << "Y_hat^I:\n" << to_text(p->y_hat_I);
  }
  out << "chi(Y)=" << r.chi_y << " branching=" << r.branching << " chi(Y_hat)=" << r.chi_y_hat
      << " chi(Y_hat^I)=" << r.chi_y_hat_I << '\n';
  if (r.asserted) {
    out << "chi(Y)+branching <= chi(Y_hat): " << r.chi_y + r.branching << " <= " << r.chi_y_hat
        << (r.holds ? " OK" : " VIOLATED") << '\n';
  } else {
    out << "boundary covers the relator at least twice; inequality not asserted\n";
  }
  if (r.immersion_case) {
    out << "immersion without free faces: " << r.chi_y << " <= " << r.chi_y_hat << (r.immersion_holds ? " OK" : " VIOLATED") << '\n';
  }
  return out.str();
}

json classification_json(const ClassificationResult& c, const PrimitivityRankReport& pr) {
  return {{"command", "classify"},
          {"pi", pr.pi ? json(*pr.pi) : json(nullptr)},
          {"classification", to_string(c.kind)},
          {"subgroup", c.subgroup},
          {"chi_y", c.chi_y},
          {"chi_y_hat_I", c.chi_y_hat_I},
          {"rank", c.rank},
          {"detail", c.detail}};
}

std::string classification_text(const ClassificationResult& c, const PrimitivityRankReport& pr) {
  std::ostringstream out;
  out << "pi=" << pi_string(pr.pi) << " chi(Y)=" << c.chi_y << '\n' << to_string(c.kind);
  if (c.kind == Classification::factors_through) out << " Q" << c.subgroup;
  out << ": " << c.detail << '\n';
  return out.str();
}

json fuzz_json(const fuzz::FuzzSummary& s) {
  return {{"command", "fuzz"},
          {"kind", s.kind},
          {"seed", s.seed},
          {"trials", s.trials},
          {"draws", s.draws},
          {"checked", s.checked},
          {"asserted", s.asserted},
          {"equality", s.equality},
          {"violations", s.violations},
          {"first_violation", s.first_violation}};
}

std::string fuzz_text(const fuzz::FuzzSummary& s) {
  std::ostringstream out;
  const int ok = s.checked - s.violations;
  if (s.kind == "updown") {
    out << ok << "/" << s.trials << " instances: >=2 good vertices (" << s.equality << " with exactly two)\n";
  } else if (s.kind == "dependence") {
    out << ok << "/" << s.trials << " weakly dependent instances: chi(Gamma)+deg(sigma)-1 <= chi(Gamma_u) ("
        << s.equality << " equality cases, " << s.draws << " draws)\n";
  } else {
    out << ok << "/" << s.trials << " branched maps: pushout inequality holds (" << s.asserted << " asserted, "
        << s.equality << " tight)\n";
  }
  if (s.violations) out << "first violation: " << s.first_violation << '\n';
  return out.str();
}

}  // namespace pirank::report
