#include "pirank/twocomplex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "pirank/error.hpp"

namespace pirank {

namespace {

std::string face_name(int g) { return "face " + std::to_string(g); }

// Checks that faces of y wrap around faces of x as m says, without the link condition.
std::string cellular_defect(const TwoComplex& y, const TwoComplex& x, const ComplexMap& m) {
  if (!is_morphism(y.skeleton, x.skeleton, m.skeleton)) return "skeleton map is not a graph morphism";
  const std::size_t nf = y.faces.size();
  if (m.face_target.size() != nf || m.face_offset.size() != nf || m.degree.size() != nf) {
    return "face map has the wrong size";
  }
  for (std::size_t g = 0; g < nf; ++g) {
    const int t = m.face_target[g];
    if (t < 0 || t >= x.num_faces()) return face_name(static_cast<int>(g)) + " maps to a missing face";
    const auto& target = x.faces[t];
    const int len = static_cast<int>(target.size());
    const auto& path = y.faces[g];
    if (m.degree[g] < 1 || static_cast<int>(path.size()) != m.degree[g] * len) {
      return face_name(static_cast<int>(g)) + " has length " + std::to_string(path.size()) + ", not degree times " +
             std::to_string(len);
    }
    if (m.face_offset[g] < 0 || m.face_offset[g] >= len) return face_name(static_cast<int>(g)) + " has a bad offset";
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Step a = path[k];
      const Step b = target[(m.face_offset[g] + k) % len];
      if (m.skeleton.edge_map[step_edge(a)] != step_edge(b) || step_forward(a) != step_forward(b)) {
        return face_name(static_cast<int>(g)) + " step " + std::to_string(k) + " does not cover the target step";
      }
    }
  }
  return {};
}

std::vector<int> edge_crossings(const TwoComplex& y) {
  std::vector<int> count(y.skeleton.num_edges(), 0);
  for (const auto& face : y.faces) {
    for (Step s : face) ++count[step_edge(s)];
  }
  return count;
}

std::vector<int> letters_to_path_rose(const Word& w, const LabeledGraph& rose_graph) {
  std::vector<int> path;
  for (Letter x : w) {
    int edge = -1;
    for (int e = 0; e < rose_graph.num_edges(); ++e) {
      if (rose_graph.edge(e).label == generator(x)) edge = e;
    }
    path.push_back(x > 0 ? edge : reverse_step(edge));
  }
  return path;
}

}  // namespace

int TwoComplex::euler_characteristic() const {
  return skeleton.num_vertices() - skeleton.num_edges() + num_faces();
}

int start_vertex(const LabeledGraph& g, Step s) {
  const Edge& e = g.edge(step_edge(s));
  return step_forward(s) ? e.from : e.to;
}

int end_vertex(const LabeledGraph& g, Step s) {
  const Edge& e = g.edge(step_edge(s));
  return step_forward(s) ? e.to : e.from;
}

std::vector<Step> reversed_path(std::span<const Step> path) {
  std::vector<Step> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(reverse_step(*it));
  return out;
}

void validate(const TwoComplex& y) {
  for (int g = 0; g < y.num_faces(); ++g) {
    const auto& path = y.faces[g];
    if (path.empty()) fail(ErrorKind::malformed_input, face_name(g) + " is empty");
    for (Step s : path) {
      if (step_edge(s) >= y.skeleton.num_edges()) fail(ErrorKind::malformed_input, face_name(g) + " crosses a missing edge");
    }
    const std::size_t n = path.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Step here = path[k];
      const Step next = path[(k + 1) % n];
      if (end_vertex(y.skeleton, here) != start_vertex(y.skeleton, next)) {
        fail(ErrorKind::malformed_input, face_name(g) + " is not a closed path");
      }
      if (n > 1 && next == reverse_step(here)) {
        fail(ErrorKind::malformed_input, face_name(g) + " backtracks");
      }
    }
  }
}

std::vector<Letter> face_letters(const TwoComplex& y, int face) {
  std::vector<Letter> out;
  for (Step s : y.faces[face]) {
    const int label = y.skeleton.edge(step_edge(s)).label;
    out.push_back(step_forward(s) ? label : -label);
  }
  return out;
}

TwoComplex one_relator_complex(const Word& w, int rank) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) fail(ErrorKind::domain, "one_relator_complex: trivial relator");
  if (core.size() != w.size()) fail(ErrorKind::domain, "one_relator_complex: relator is not cyclically reduced");
  TwoComplex x;
  x.skeleton = rose(rank);
  const Alphabet alphabet(rank);
  for (Letter l : w) {
    if (!alphabet.contains(l)) fail(ErrorKind::malformed_input, "relator exceeds the rank");
  }
  x.faces.push_back(letters_to_path_rose(w, x.skeleton));
  return x;
}

std::string branched_map_defect(const TwoComplex& y, const TwoComplex& x, const ComplexMap& m) {
  if (std::string defect = cellular_defect(y, x, m); !defect.empty()) return defect;
  // Link of a vertex: half-edges are its vertices, face corners its edges.
  // Key: half-edge (edge, end), image corner (face, position), which end.
  std::set<std::tuple<int, int, int, int, int>> seen;
  for (int g = 0; g < y.num_faces(); ++g) {
    const auto& path = y.faces[g];
    const int n = static_cast<int>(path.size());
    const int len = static_cast<int>(x.faces[m.face_target[g]].size());
    for (int k = 0; k < n; ++k) {
      const Step in = path[(k + n - 1) % n];
      const Step out = path[k];
      const int position = (m.face_offset[g] + k) % len;
      const auto a = std::make_tuple(step_edge(in), step_forward(in) ? 1 : 0, m.face_target[g], position, 0);
      const auto b = std::make_tuple(step_edge(out), step_forward(out) ? 0 : 1, m.face_target[g], position, 1);
      if (!seen.insert(a).second || !seen.insert(b).second) {
        return "the link map is not an immersion at " + face_name(g) + " corner " + std::to_string(k);
      }
    }
  }
  return {};
}

bool is_immersion(const TwoComplex& y, const TwoComplex& x, const ComplexMap& m) {
  if (!branched_map_defect(y, x, m).empty()) return false;
  if (!is_immersion(y.skeleton, x.skeleton, m.skeleton)) return false;
  return std::all_of(m.degree.begin(), m.degree.end(), [](int d) { return d == 1; });
}

int BranchedMap::degree_sum() const {
  int total = 0;
  for (int d : map.degree) total += d;
  return total;
}

int BranchedMap::branching() const { return degree_sum() - domain.num_faces(); }

BranchedMap branched_map_by_labels(TwoComplex y, const TwoComplex& x) {
  validate(y);
  validate(x);
  if (x.skeleton.num_vertices() != 1) fail(ErrorKind::domain, "branched_map_by_labels: target skeleton is not a rose");
  std::map<int, int> edge_of_label;
  for (int e = 0; e < x.skeleton.num_edges(); ++e) {
    if (x.skeleton.edge(e).label == 0 || !edge_of_label.emplace(x.skeleton.edge(e).label, e).second) {
      fail(ErrorKind::domain, "branched_map_by_labels: target labels do not name its edges");
    }
  }
  BranchedMap f;
  f.map.skeleton.vertex_map.assign(y.skeleton.num_vertices(), 0);
  for (const Edge& e : y.skeleton.edges()) {
    auto it = edge_of_label.find(e.label);
    if (it == edge_of_label.end()) fail(ErrorKind::domain, "branched_map_by_labels: edge label missing from the target");
    f.map.skeleton.edge_map.push_back(it->second);
  }
  for (int g = 0; g < y.num_faces(); ++g) {
    bool found = false;
    for (int pass = 0; pass < 2 && !found; ++pass) {
      if (pass == 1) y.faces[g] = reversed_path(y.faces[g]);
      const auto letters = face_letters(y, g);
      for (int t = 0; t < x.num_faces() && !found; ++t) {
        const auto target = face_letters(x, t);
        const std::size_t len = target.size();
        if (letters.size() % len != 0) continue;
        for (std::size_t offset = 0; offset < len && !found; ++offset) {
          bool match = true;
          for (std::size_t k = 0; k < letters.size() && match; ++k) match = letters[k] == target[(offset + k) % len];
          if (!match) continue;
          found = true;
          f.map.face_target.push_back(t);
          f.map.face_offset.push_back(static_cast<int>(offset));
          f.map.degree.push_back(static_cast<int>(letters.size() / len));
        }
      }
    }
    if (!found) fail(ErrorKind::domain, face_name(g) + " does not read a power of a target face");
  }
  f.domain = std::move(y);
  f.codomain = x;
  if (std::string defect = branched_map_defect(f.domain, f.codomain, f.map); !defect.empty()) {
    fail(ErrorKind::domain, "not a branched map: " + defect);
  }
  return f;
}

ComplexFolding fold_complex_map(const TwoComplex& y, const TwoComplex& x, const ComplexMap& f) {
  validate(y);
  if (std::string defect = cellular_defect(y, x, f); !defect.empty()) fail(ErrorKind::domain, "fold_complex_map: " + defect);
  for (int d : f.degree) {
    if (d != 1) fail(ErrorKind::domain, "fold_complex_map: the map is not combinatorial");
  }
  const Folding folded = fold_over(y.skeleton, f.skeleton.edge_map);
  ComplexFolding out;
  out.z.skeleton = folded.folded;
  out.front.skeleton = folded.quotient;
  out.back.skeleton.vertex_map.assign(folded.folded.num_vertices(), -1);
  out.back.skeleton.edge_map.assign(folded.folded.num_edges(), -1);
  for (int v = 0; v < y.skeleton.num_vertices(); ++v) out.back.skeleton.vertex_map[folded.quotient.vertex_map[v]] = f.skeleton.vertex_map[v];
  for (int e = 0; e < y.skeleton.num_edges(); ++e) out.back.skeleton.edge_map[folded.quotient.edge_map[e]] = f.skeleton.edge_map[e];

  // Faces with the same target and the same boundary, read from the step
  // over target position 0, become one face.
  std::map<std::tuple<int, std::vector<Step>>, int> face_of;
  for (int g = 0; g < y.num_faces(); ++g) {
    std::vector<Step> pushed;
    for (Step s : y.faces[g]) {
      const int e = folded.quotient.edge_map[step_edge(s)];
      pushed.push_back(step_forward(s) ? e : reverse_step(e));
    }
    const int n = static_cast<int>(pushed.size());
    const int r = (n - f.face_offset[g]) % n;
    std::vector<Step> aligned(n);
    for (int i = 0; i < n; ++i) aligned[i] = pushed[(i + r) % n];
    auto [it, fresh] = face_of.emplace(std::make_tuple(f.face_target[g], aligned), out.z.num_faces());
    if (fresh) {
      out.z.faces.push_back(aligned);
      out.back.face_target.push_back(f.face_target[g]);
      out.back.face_offset.push_back(0);
      out.back.degree.push_back(1);
    }
    out.front.face_target.push_back(it->second);
    out.front.face_offset.push_back((n - r) % n);
    out.front.degree.push_back(1);
  }
  if (!is_immersion(out.z, x, out.back)) fail(ErrorKind::invariant, "folded complex does not immerse");
  return out;
}

std::vector<FreeFace> free_faces(const TwoComplex& y) {
  const std::vector<int> total = edge_crossings(y);
  std::vector<FreeFace> out;
  for (int g = 0; g < y.num_faces(); ++g) {
    std::map<int, int> mine;
    for (Step s : y.faces[g]) ++mine[step_edge(s)];
    for (auto [e, k] : mine) {
      if (k == 1 && total[e] == 1) out.push_back({g, e});
    }
  }
  return out;
}

TwoComplex collapse(const TwoComplex& y, const FreeFace& c) {
  const auto candidates = free_faces(y);
  if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
    fail(ErrorKind::domain, "collapse: edge " + std::to_string(c.edge) + " is not free in " + face_name(c.face));
  }
  TwoComplex out;
  out.skeleton = LabeledGraph(y.skeleton.num_vertices());
  out.skeleton.set_base(y.skeleton.base());
  for (int e = 0; e < y.skeleton.num_edges(); ++e) {
    if (e != c.edge) out.skeleton.add_edge(y.skeleton.edge(e).from, y.skeleton.edge(e).to, y.skeleton.edge(e).label);
  }
  for (int g = 0; g < y.num_faces(); ++g) {
    if (g == c.face) continue;
    std::vector<Step> path;
    for (Step s : y.faces[g]) {
      const int e = step_edge(s) - (step_edge(s) > c.edge ? 1 : 0);
      path.push_back(step_forward(s) ? e : reverse_step(e));
    }
    out.faces.push_back(std::move(path));
  }
  return out;
}

std::vector<int> boundary_edges(const TwoComplex& y) {
  const std::vector<int> total = edge_crossings(y);
  std::vector<int> out;
  for (int e = 0; e < y.skeleton.num_edges(); ++e) {
    if (total[e] == 1) out.push_back(e);
  }
  return out;
}

NielsenTrace nielsen_reduce(const TwoComplex& y) {
  validate(y);
  if (y.skeleton.num_vertices() == 0 || betti_euler(y.skeleton).components != 1) {
    fail(ErrorKind::precondition, "nielsen_reduce: the complex is not connected");
  }
  NielsenTrace trace;
  trace.reduced = y;
  for (auto candidates = free_faces(trace.reduced); !candidates.empty(); candidates = free_faces(trace.reduced)) {
    trace.collapses.push_back(candidates.front());
    trace.reduced = collapse(trace.reduced, candidates.front());
  }
  LabeledGraph based = trace.reduced.skeleton;
  based.set_base(0);
  const Basis basis = spanning_tree_basis(based);
  trace.rank = basis.rank();
  for (const auto& face : trace.reduced.faces) {
    std::vector<Letter> letters;
    for (Step s : face) {
      const int gen = basis.generator_of_edge[step_edge(s)];
      if (gen >= 0) letters.push_back(step_forward(s) ? gen + 1 : -(gen + 1));
    }
    trace.attaching_words.push_back(cyclic_reduce(Word::reduce(letters)).core);
  }
  if (trace.attaching_words.empty()) {
    trace.reduces = true;
    return trace;
  }
  const bool trivial = std::any_of(trace.attaching_words.begin(), trace.attaching_words.end(),
                                   [](const Word& w) { return w.empty(); });
  if (!trivial && trace.rank > 0) trace.whitehead = whitehead_minimize(trace.attaching_words, trace.rank);
  trace.reduces = !trivial && is_sub_basis(trace.attaching_words, trace.rank);
  return trace;
}

bool nielsen_reduces_to_graph(const TwoComplex& y) { return nielsen_reduce(y).reduces; }

AdjunctionInstance adjunction_of(const BranchedMap& f) {
  const TwoComplex& y = f.domain;
  const TwoComplex& x = f.codomain;
  if (x.num_faces() != 1) fail(ErrorKind::domain, "the target must have exactly one face");
  if (!branched_map_defect(y, x, f.map).empty()) fail(ErrorKind::domain, "adjunction_of: not a branched map");
  AdjunctionInstance inst;
  inst.omega = x.skeleton;
  inst.gamma = y.skeleton;
  inst.h = f.map.skeleton;
  const auto& relator = x.faces[0];
  const int len = static_cast<int>(relator.size());
  inst.s = LabeledGraph(len);
  for (int j = 0; j < len; ++j) {
    const Step st = relator[j];
    const int label = x.skeleton.edge(step_edge(st)).label;
    if (step_forward(st)) {
      inst.s.add_edge(j, (j + 1) % len, label);
    } else {
      inst.s.add_edge((j + 1) % len, j, label);
    }
    inst.w.edge_map.push_back(step_edge(st));
    inst.w.vertex_map.push_back(start_vertex(x.skeleton, st));
  }
  for (int g = 0; g < y.num_faces(); ++g) {
    const auto& path = y.faces[g];
    const int n = static_cast<int>(path.size());
    const int base = inst.p.num_vertices();
    for (int k = 0; k < n; ++k) inst.p.add_vertex();
    for (int k = 0; k < n; ++k) {
      const Step st = path[k];
      const int label = y.skeleton.edge(step_edge(st)).label;
      if (step_forward(st)) {
        inst.p.add_edge(base + k, base + (k + 1) % n, label);
      } else {
        inst.p.add_edge(base + (k + 1) % n, base + k, label);
      }
      inst.lambda.vertex_map.push_back(start_vertex(y.skeleton, st));
      inst.lambda.edge_map.push_back(step_edge(st));
      const int position = (f.map.face_offset[g] + k) % len;
      inst.sigma.vertex_map.push_back(position);
      inst.sigma.edge_map.push_back(position);
    }
  }
  validate(inst);
  return inst;
}

PushoutResult one_relator_pushout(const BranchedMap& f) {
  if (f.codomain.num_faces() != 1) fail(ErrorKind::domain, "one_relator_pushout: the target must have one face");
  if (std::string defect = branched_map_defect(f.domain, f.codomain, f.map); !defect.empty()) {
    fail(ErrorKind::domain, "one_relator_pushout: " + defect);
  }
  PushoutResult out;
  out.chi_y = f.domain.euler_characteristic();
  if (f.domain.num_faces() == 0) {
    out.degenerate = true;
    out.y_hat.skeleton = f.domain.skeleton;
    out.f_z.skeleton = identity_morphism(f.domain.skeleton);
    out.g_z.skeleton = f.map.skeleton;
    const Folding folded = fold_over(f.domain.skeleton, f.map.skeleton.edge_map);
    out.y_hat_I.skeleton = folded.folded;
    out.to_folded = folded.quotient;
    out.chi_y_hat = out.y_hat.euler_characteristic();
    out.chi_y_hat_I = out.y_hat_I.euler_characteristic();
    return out;
  }
  const AdjunctionInstance inst = adjunction_of(f);
  const ResolvedSpace space = build(inst);
  std::vector<Step> face;
  std::vector<Step> folded_face;
  for (int j = 0; j < inst.s.num_edges(); ++j) {
    const bool forward = inst.s.edge(j).from == j;
    const int e = space.s_to_u.edge_map[j];
    const int fe = space.fold_map.edge_map[e];
    face.push_back(forward ? e : reverse_step(e));
    folded_face.push_back(forward ? fe : reverse_step(fe));
  }
  out.y_hat = {space.gamma_u, {face}};
  out.y_hat_I = {space.gamma_u_I, {folded_face}};
  out.to_folded = space.fold_map;
  out.f_z = {space.gamma_to_u, std::vector<int>(f.domain.num_faces(), 0), f.map.face_offset, f.map.degree};
  out.g_z = {space.l, {0}, {0}, {1}};
  if (!branched_map_defect(f.domain, out.y_hat, out.f_z).empty() ||
      !branched_map_defect(out.y_hat, f.codomain, out.g_z).empty()) {
    fail(ErrorKind::invariant, "one-relator pushout does not factor the branched map");
  }
  out.chi_y_hat = out.y_hat.euler_characteristic();
  out.chi_y_hat_I = out.y_hat_I.euler_characteristic();
  if (out.chi_y_hat_I < out.chi_y_hat) fail(ErrorKind::invariant, "folding the pushout decreased chi");
  const CircleCovering cover = circle_covering(inst);
  if (!cover.covering || f.branching() != cover.degree - f.domain.num_faces()) {
    fail(ErrorKind::invariant, "branching degrees disagree with the degree of sigma");
  }
  return out;
}

PushoutInequalityReport pushout_inequality(const BranchedMap& f) {
  PushoutInequalityReport report;
  if (f.codomain.num_faces() != 1) fail(ErrorKind::domain, "pushout_inequality: the target must have one face");
  const Word relator = Word::reduce(face_letters(f.codomain, 0));
  const RootDecomposition root = maximal_root(cyclic_reduce(relator).core);
  if (root.exponent > 1) {
    report.relator_indivisible = false;
    report.relator_root = root.root;
    return report;
  }
  const PushoutResult pushout = one_relator_pushout(f);
  report.chi_y = pushout.chi_y;
  report.chi_y_hat = pushout.chi_y_hat;
  report.chi_y_hat_I = pushout.chi_y_hat_I;
  report.branching = f.branching();
  report.coverage.assign(f.codomain.skeleton.num_edges(), 0);
  for (int e : boundary_edges(f.domain)) ++report.coverage[f.map.skeleton.edge_map[e]];
  report.two_to_one = true;
  for (Step s : f.codomain.faces[0]) report.two_to_one = report.two_to_one && report.coverage[step_edge(s)] >= 2;
  report.asserted = !report.two_to_one;
  report.holds = !report.asserted || report.chi_y + report.branching <= report.chi_y_hat;
  report.immersion_case = is_immersion(f.domain, f.codomain, f.map) && free_faces(f.domain).empty();
  report.immersion_holds = !report.immersion_case || report.chi_y <= report.chi_y_hat;
  return report;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::reduces_to_graph: return "reduces-to-graph";
    case Classification::factors_through: return "factors-through-Q";
    case Classification::boundary_case_violation: return "boundary-case-violation";
  }
  return "?";
}

ClassificationResult classify_immersion(const BranchedMap& f, const PrimitivityRankReport& pr) {
  const TwoComplex& y = f.domain;
  if (!is_immersion(y, f.codomain, f.map)) fail(ErrorKind::precondition, "classify_immersion: the map is not an immersion");
  if (y.skeleton.num_vertices() == 0 || betti_euler(y.skeleton).components != 1) {
    fail(ErrorKind::precondition, "classify_immersion: the complex is not connected");
  }
  if (!free_faces(y).empty()) fail(ErrorKind::precondition, "classify_immersion: the complex has a free face");
  for (int k : y.skeleton.valences()) {
    if (k < 2) fail(ErrorKind::precondition, "classify_immersion: the skeleton is not a core graph");
  }
  ClassificationResult result;
  result.chi_y = y.euler_characteristic();
  if (pr.pi && result.chi_y < 2 - *pr.pi) {
    fail(ErrorKind::precondition, "classify_immersion: chi(Y) = " + std::to_string(result.chi_y) + " is below 2 - pi(w)");
  }
  if (y.num_faces() == 0) {
    result.detail = "Y is a graph";
    return result;
  }
  auto violation = [&](const std::string& why) {
    result.kind = Classification::boundary_case_violation;
    result.detail = why;
    return result;
  };
  const PushoutResult pushout = one_relator_pushout(f);
  result.chi_y_hat_I = pushout.chi_y_hat_I;
  result.rank = betti_euler(pushout.y_hat_I.skeleton).b1;
  if (result.chi_y_hat_I < result.chi_y) return violation("chi of the immersed pushout is below chi(Y)");
  const NielsenTrace reduction = nielsen_reduce(pushout.y_hat_I);
  if (reduction.reduces) {
    if (!nielsen_reduces_to_graph(y)) return violation("the pushout reduces to a graph but Y does not");
    result.detail = "the immersed pushout has rank " + std::to_string(result.rank) + " and reduces to a graph";
    return result;
  }
  if (!pr.pi) return violation("w is primitive yet imprimitive in the pushout");
  if (result.rank != *pr.pi) {
    return violation("w is imprimitive in a rank " + std::to_string(result.rank) + " subgroup, pi(w) = " + std::to_string(*pr.pi));
  }
  // Base the pushout skeleton where it starts reading the cyclic core of w.
  const auto relator = face_letters(f.codomain, 0);
  const auto& core = pr.core.letters();
  const auto& path = pushout.y_hat_I.faces[0];
  std::optional<int> base;
  for (std::size_t r = 0; r < relator.size() && !base && relator.size() == core.size(); ++r) {
    bool match = true;
    for (std::size_t k = 0; k < core.size() && match; ++k) match = relator[(r + k) % relator.size()] == core[k];
    if (match) base = start_vertex(pushout.y_hat_I.skeleton, path[r]);
  }
  if (!base) fail(ErrorKind::precondition, "classify_immersion: the report is for a different relator");
  LabeledGraph skeleton = pushout.y_hat_I.skeleton;
  skeleton.set_base(*base);
  for (std::size_t i = 0; i < pr.w_subgroups.size(); ++i) {
    if (factors_through(skeleton, pr.w_subgroups[i].graph)) {
      result.kind = Classification::factors_through;
      result.subgroup = static_cast<int>(i);
      result.detail = "factors through w-subgroup " + std::to_string(i);
      return result;
    }
  }
  return violation("no w-subgroup receives the immersed pushout");
}

TwoComplex finite_cover(const Word& w, int rank, const std::vector<std::vector<int>>& permutations) {
  if (static_cast<int>(permutations.size()) != rank) fail(ErrorKind::domain, "finite_cover: one permutation per generator");
  const int d = static_cast<int>(permutations.front().size());
  std::vector<std::vector<int>> inverse(rank, std::vector<int>(d, -1));
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(permutations[i].size()) != d) fail(ErrorKind::domain, "finite_cover: permutations of different degrees");
    for (int v = 0; v < d; ++v) {
      const int t = permutations[i][v];
      if (t < 0 || t >= d || inverse[i][t] >= 0) fail(ErrorKind::domain, "finite_cover: not a permutation");
      inverse[i][t] = v;
    }
  }
  TwoComplex y;
  y.skeleton = LabeledGraph(d);
  for (int i = 0; i < rank; ++i) {
    for (int v = 0; v < d; ++v) y.skeleton.add_edge(v, permutations[i][v], i + 1);
  }
  for (int v = 0; v < d; ++v) {
    std::vector<Step> path;
    int at = v;
    for (Letter x : w) {
      const int i = generator(x) - 1;
      if (x > 0) {
        path.push_back(i * d + at);
        at = permutations[i][at];
      } else {
        at = inverse[i][at];
        path.push_back(reverse_step(i * d + at));
      }
    }
    if (at != v) fail(ErrorKind::domain, "finite_cover: the relator does not lift to a closed loop");
    y.faces.push_back(std::move(path));
  }
  validate(y);
  return y;
}

}  // namespace pirank
