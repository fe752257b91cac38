#include "pirank/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "pirank/error.hpp"
#include "pirank/union_find.hpp"

namespace pirank {

int LabeledGraph::add_edge(int from, int to, int label) {
  if (from < 0 || from >= vertices_ || to < 0 || to >= vertices_) {
    fail(ErrorKind::malformed_input, "edge endpoint out of range");
  }
  edges_.push_back({from, to, label});
  return static_cast<int>(edges_.size()) - 1;
}

int LabeledGraph::valence(int v) const {
  int n = 0;
  for (const Edge& e : edges_) n += (e.from == v) + (e.to == v);
  return n;
}

std::vector<int> LabeledGraph::valences() const {
  std::vector<int> out(vertices_, 0);
  for (const Edge& e : edges_) {
    ++out[e.from];
    ++out[e.to];
  }
  return out;
}

bool LabeledGraph::is_labeled() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label > 0; });
}

int LabeledGraph::max_label() const noexcept {
  int m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.label);
  return m;
}

bool LabeledGraph::is_immersed() const {
  std::vector<std::pair<long long, int>> keys;
  keys.reserve(2 * edges_.size());
  const long long stride = max_label() + 1;
  for (const Edge& e : edges_) {
    keys.emplace_back(static_cast<long long>(e.from) * stride + e.label, 0);
    keys.emplace_back(static_cast<long long>(e.to) * stride + e.label, 1);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool is_morphism(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& f) {
  if (static_cast<int>(f.vertex_map.size()) != domain.num_vertices() ||
      static_cast<int>(f.edge_map.size()) != domain.num_edges()) {
    return false;
  }
  for (int v : f.vertex_map) {
    if (v < 0 || v >= codomain.num_vertices()) return false;
  }
  for (int e = 0; e < domain.num_edges(); ++e) {
    const int image = f.edge_map[e];
    if (image < 0 || image >= codomain.num_edges()) return false;
    const Edge& src = domain.edge(e);
    const Edge& dst = codomain.edge(image);
    if (f.vertex_map[src.from] != dst.from || f.vertex_map[src.to] != dst.to) return false;
  }
  return true;
}

bool is_label_preserving(const LabeledGraph& domain, const LabeledGraph& codomain,
                         const GraphMorphism& f) {
  if (!is_morphism(domain, codomain, f)) return false;
  for (int e = 0; e < domain.num_edges(); ++e) {
    const int a = domain.edge(e).label;
    const int b = codomain.edge(f.edge_map[e]).label;
    if (a != 0 && b != 0 && a != b) return false;
  }
  return true;
}

bool is_immersion(const LabeledGraph& domain, const LabeledGraph& codomain, const GraphMorphism& f) {
  if (!is_morphism(domain, codomain, f)) return false;
  std::vector<std::tuple<int, int, int>> keys;
  keys.reserve(2 * domain.num_edges());
  for (int e = 0; e < domain.num_edges(); ++e) {
    keys.emplace_back(domain.edge(e).from, f.edge_map[e], 0);
    keys.emplace_back(domain.edge(e).to, f.edge_map[e], 1);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  GraphMorphism out;
  out.vertex_map.reserve(first.vertex_map.size());
  out.edge_map.reserve(first.edge_map.size());
  for (int v : first.vertex_map) out.vertex_map.push_back(second.vertex_map[v]);
  for (int e : first.edge_map) out.edge_map.push_back(second.edge_map[e]);
  return out;
}

GraphMorphism identity_morphism(const LabeledGraph& g) {
  GraphMorphism id;
  id.vertex_map.resize(g.num_vertices());
  id.edge_map.resize(g.num_edges());
  std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
  std::iota(id.edge_map.begin(), id.edge_map.end(), 0);
  return id;
}

LabeledGraph rose(int rank) {
  LabeledGraph g(1);
  for (int i = 1; i <= rank; ++i) g.add_edge(0, 0, i);
  g.set_base(0);
  return g;
}

GraphMorphism morphism_to_rose(const LabeledGraph& g) {
  GraphMorphism f;
  f.vertex_map.assign(g.num_vertices(), 0);
  f.edge_map.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.label <= 0) fail(ErrorKind::domain, "morphism_to_rose: unlabelled edge");
    f.edge_map.push_back(e.label - 1);
  }
  return f;
}

LabeledGraph word_to_cycle(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) fail(ErrorKind::domain, "word_to_cycle: empty word");
  if (!w.is_cyclically_reduced()) {
    fail(ErrorKind::domain, "word_to_cycle: " + to_string(w) + " is not cyclically reduced, the cycle would not immerse");
  }
  const int n = static_cast<int>(w.size());
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i) {
    const Letter x = w[i];
    if (!alphabet.contains(x)) fail(ErrorKind::malformed_input, "word_to_cycle: letter outside alphabet");
    const int next = (i + 1) % n;
    if (x > 0) {
      g.add_edge(i, next, x);
    } else {
      g.add_edge(next, i, -x);
    }
  }
  g.set_base(0);
  return g;
}

Folding fold_over(const LabeledGraph& g, std::span<const int> edge_image) {
  const int nv = g.num_vertices();
  const int ne = g.num_edges();
  UnionFind vertices(nv);
  UnionFind edges(ne);
  // Per vertex root: (image, direction) -> some edge of the class.
  std::vector<std::map<std::pair<int, int>, int>> star(nv);
  std::deque<std::pair<int, int>> edge_merges;

  auto attach = [&](int v, std::pair<int, int> key, int e) {
    auto [it, inserted] = star[v].emplace(key, e);
    if (!inserted) edge_merges.emplace_back(it->second, e);
  };
  for (int e = 0; e < ne; ++e) {
    attach(g.edge(e).from, {edge_image[e], 0}, e);
    attach(g.edge(e).to, {edge_image[e], 1}, e);
  }

  auto merge_vertices = [&](int a, int b) {
    a = vertices.find(a);
    b = vertices.find(b);
    if (a == b) return;
    vertices.unite(a, b);
    const int root = vertices.find(a);
    const int other = root == a ? b : a;
    if (star[root].size() < star[other].size()) std::swap(star[root], star[other]);
    for (const auto& [key, e] : star[other]) attach(root, key, e);
    star[other].clear();
  };

  while (!edge_merges.empty()) {
    auto [e, f] = edge_merges.front();
    edge_merges.pop_front();
    if (!edges.unite(e, f)) continue;
    merge_vertices(g.edge(e).from, g.edge(f).from);
    merge_vertices(g.edge(e).to, g.edge(f).to);
  }

  Folding out;
  std::vector<int> vclass;
  std::vector<int> eclass;
  const int folded_vertices = vertices.classes(vclass);
  const int folded_edges = edges.classes(eclass);
  out.folded = LabeledGraph(folded_vertices);
  std::vector<int> representative(folded_edges, -1);
  for (int e = 0; e < ne; ++e) {
    if (representative[eclass[e]] < 0) representative[eclass[e]] = e;
  }
  for (int c = 0; c < folded_edges; ++c) {
    const Edge& e = g.edge(representative[c]);
    out.folded.add_edge(vclass[e.from], vclass[e.to], e.label);
  }
  if (g.base()) out.folded.set_base(vclass[*g.base()]);
  out.quotient.vertex_map = std::move(vclass);
  out.quotient.edge_map = std::move(eclass);
  return out;
}

Folding fold(const LabeledGraph& g) {
  std::vector<int> labels;
  labels.reserve(g.num_edges());
  for (const Edge& e : g.edges()) labels.push_back(e.label);
  return fold_over(g, labels);
}

FiberProduct fiber_product(const LabeledGraph& first, const GraphMorphism& h,
                           const LabeledGraph& second, const GraphMorphism& w,
                           const LabeledGraph& target) {
  if (!is_morphism(first, target, h) || !is_morphism(second, target, w)) {
    fail(ErrorKind::domain, "fiber_product: maps must be morphisms to a common target");
  }
  FiberProduct out;
  std::map<std::pair<int, int>, int> vertex_id;
  for (int x = 0; x < first.num_vertices(); ++x) {
    for (int y = 0; y < second.num_vertices(); ++y) {
      if (h.vertex_map[x] != w.vertex_map[y]) continue;
      vertex_id[{x, y}] = out.graph.add_vertex();
      out.to_first.vertex_map.push_back(x);
      out.to_second.vertex_map.push_back(y);
    }
  }
  for (int e = 0; e < first.num_edges(); ++e) {
    for (int f = 0; f < second.num_edges(); ++f) {
      if (h.edge_map[e] != w.edge_map[f]) continue;
      const Edge& a = first.edge(e);
      const Edge& b = second.edge(f);
      out.graph.add_edge(vertex_id.at({a.from, b.from}), vertex_id.at({a.to, b.to}),
                         a.label != 0 ? a.label : b.label);
      out.to_first.edge_map.push_back(e);
      out.to_second.edge_map.push_back(f);
    }
  }
  if (first.base() && second.base()) {
    auto it = vertex_id.find({*first.base(), *second.base()});
    if (it != vertex_id.end()) out.graph.set_base(it->second);
  }
  return out;
}

FiberProduct fiber_product(const LabeledGraph& first, const LabeledGraph& second) {
  const int rank = std::max({first.max_label(), second.max_label(), 1});
  return fiber_product(first, morphism_to_rose(first), second, morphism_to_rose(second), rose(rank));
}

namespace {

Subgraph induced(const LabeledGraph& g, const std::vector<char>& keep_vertex) {
  Subgraph out;
  std::vector<int> new_id(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!keep_vertex[v]) continue;
    new_id[v] = out.graph.add_vertex();
    out.vertex_origin.push_back(v);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (new_id[edge.from] < 0 || new_id[edge.to] < 0) continue;
    out.graph.add_edge(new_id[edge.from], new_id[edge.to], edge.label);
    out.edge_origin.push_back(e);
  }
  if (g.base() && new_id[*g.base()] >= 0) out.graph.set_base(new_id[*g.base()]);
  return out;
}

}  // namespace

Subgraph core(const LabeledGraph& g) {
  std::vector<char> keep(g.num_vertices(), 1);
  std::vector<int> valence = g.valences();
  std::vector<std::vector<int>> incident(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    incident[g.edge(e).from].push_back(e);
    if (g.edge(e).to != g.edge(e).from) incident[g.edge(e).to].push_back(e);
  }
  std::vector<char> edge_alive(g.num_edges(), 1);
  std::queue<int> pending;
  auto prunable = [&](int v) { return keep[v] && valence[v] == 1 && (!g.base() || *g.base() != v); };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (prunable(v)) pending.push(v);
  }
  while (!pending.empty()) {
    const int v = pending.front();
    pending.pop();
    if (!prunable(v)) continue;
    keep[v] = 0;
    for (int e : incident[v]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      const int other = g.edge(e).from == v ? g.edge(e).to : g.edge(e).from;
      --valence[other];
      if (prunable(other)) pending.push(other);
    }
  }
  return induced(g, keep);
}

Subgraph connected_component(const LabeledGraph& g, int vertex) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) uf.unite(e.from, e.to);
  std::vector<char> keep(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) keep[v] = uf.same(v, vertex);
  return induced(g, keep);
}

BettiEuler betti_euler(int vertices, std::span<const std::pair<int, int>> edges) {
  UnionFind uf(vertices);
  int components = vertices;
  for (auto [a, b] : edges) components -= uf.unite(a, b) ? 1 : 0;
  const int chi = vertices - static_cast<int>(edges.size());
  return {components, components - chi, chi};
}

BettiEuler betti_euler(const LabeledGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(e.from, e.to);
  return betti_euler(g.num_vertices(), edges);
}

namespace {

struct HalfEdge {
  int label;
  int direction;  // 0 outgoing, 1 incoming
  int edge;
  int other;

  auto key() const { return std::tie(label, direction, edge); }
};

std::vector<std::vector<HalfEdge>> sorted_stars(const LabeledGraph& g) {
  std::vector<std::vector<HalfEdge>> star(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    star[edge.from].push_back({edge.label, 0, e, edge.to});
    star[edge.to].push_back({edge.label, 1, e, edge.from});
  }
  for (auto& s : star) {
    std::sort(s.begin(), s.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.key() < b.key(); });
  }
  return star;
}

int require_base(const LabeledGraph& g, const char* what) {
  if (!g.base()) fail(ErrorKind::domain, std::string(what) + ": graph must be based");
  return *g.base();
}

// Index for immersed labelled graphs: slot (vertex, letter) -> edge.
class LetterIndex {
 public:
  explicit LetterIndex(const LabeledGraph& g) : stride_(2 * std::max(g.max_label(), 1)), slots_(g.num_vertices() * stride_, -1) {
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.label <= 0) continue;
      slots_[edge.from * stride_ + letter_index(edge.label)] = e;
      slots_[edge.to * stride_ + letter_index(-edge.label)] = e;
    }
  }
  int edge(int vertex, Letter x) const {
    const int idx = letter_index(x);
    if (idx >= stride_) return -1;
    return slots_[vertex * stride_ + idx];
  }

 private:
  int stride_;
  std::vector<int> slots_;
};

}  // namespace

Basis spanning_tree_basis(const LabeledGraph& g) {
  const int base = require_base(g, "spanning_tree_basis");
  Basis basis;
  basis.generator_of_edge.assign(g.num_edges(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<char> tree_edge(g.num_edges(), 0);
  std::vector<std::vector<Letter>> path(g.num_vertices());
  const auto star = sorted_stars(g);
  std::queue<int> frontier;
  frontier.push(base);
  seen[base] = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const HalfEdge& h : star[v]) {
      if (seen[h.other]) continue;
      seen[h.other] = 1;
      tree_edge[h.edge] = 1;
      path[h.other] = path[v];
      path[h.other].push_back(h.direction == 0 ? h.label : -h.label);
      frontier.push(h.other);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (tree_edge[e] || !seen[edge.from]) continue;
    basis.generator_of_edge[e] = basis.rank();
    basis.generator_edges.push_back(e);
    std::vector<Letter> raw = path[edge.from];
    raw.push_back(edge.label);
    const Word back = Word::reduce(path[edge.to]).inverse();
    raw.insert(raw.end(), back.begin(), back.end());
    basis.generator_words.push_back(edge.label > 0 ? Word::reduce(raw) : Word());
  }
  return basis;
}

std::optional<std::vector<int>> read_path(const LabeledGraph& g, int start,
                                          std::span<const Letter> letters) {
  const LetterIndex index(g);
  std::vector<int> edges;
  edges.reserve(letters.size());
  int v = start;
  for (Letter x : letters) {
    const int e = index.edge(v, x);
    if (e < 0) return std::nullopt;
    edges.push_back(e);
    v = x > 0 ? g.edge(e).to : g.edge(e).from;
  }
  return edges;
}

Lift express_in_basis(const LabeledGraph& g, const Basis& basis, const Word& loop) {
  const int base = require_base(g, "express_in_basis");
  if (!g.is_immersed()) fail(ErrorKind::domain, "express_in_basis: graph must be immersed");
  Lift lift;
  const LetterIndex index(g);
  std::vector<Letter> raw;
  int v = base;
  for (Letter x : loop) {
    const int e = index.edge(v, x);
    if (e < 0) return lift;
    lift.edges.push_back(e);
    const int gen = basis.generator_of_edge[e];
    if (gen >= 0) raw.push_back(x > 0 ? gen + 1 : -(gen + 1));
    v = x > 0 ? g.edge(e).to : g.edge(e).from;
  }
  lift.end_vertex = v;
  lift.status = v == base ? LiftStatus::closed : LiftStatus::open;
  if (lift.status == LiftStatus::closed) lift.in_basis = Word::reduce(raw);
  return lift;
}

Lift express_in_basis(const LabeledGraph& g, const Word& loop) {
  return express_in_basis(g, spanning_tree_basis(g), loop);
}

std::string canonical_form(const LabeledGraph& g) {
  const int base = require_base(g, "canonical_form");
  const auto star = sorted_stars(g);
  std::vector<int> number(g.num_vertices(), -1);
  std::vector<int> order{base};
  number[base] = 0;
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    out << '[';
    for (const HalfEdge& h : star[v]) {
      if (number[h.other] < 0) {
        number[h.other] = static_cast<int>(order.size());
        order.push_back(h.other);
      }
      out << h.label << (h.direction == 0 ? '+' : '-') << number[h.other] << ' ';
    }
    out << ']';
  }
  return out.str();
}

std::string unbased_canonical_form(const LabeledGraph& g) {
  std::string best;
  LabeledGraph copy = g;
  for (int v = 0; v < g.num_vertices(); ++v) {
    copy.set_base(v);
    std::string form = canonical_form(copy);
    if (v == 0 || form < best) best = std::move(form);
  }
  return best;
}

std::optional<GraphMorphism> based_morphism(const LabeledGraph& from, const LabeledGraph& to) {
  const int a = require_base(from, "based_morphism");
  const int b = require_base(to, "based_morphism");
  const LetterIndex index(to);
  GraphMorphism f;
  f.vertex_map.assign(from.num_vertices(), -1);
  f.edge_map.assign(from.num_edges(), -1);
  const auto star = sorted_stars(from);
  std::queue<int> frontier;
  f.vertex_map[a] = b;
  frontier.push(a);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const HalfEdge& h : star[v]) {
      if (h.label <= 0) return std::nullopt;
      const Letter x = h.direction == 0 ? h.label : -h.label;
      const int image = index.edge(f.vertex_map[v], x);
      if (image < 0) return std::nullopt;
      if (f.edge_map[h.edge] >= 0 && f.edge_map[h.edge] != image) return std::nullopt;
      f.edge_map[h.edge] = image;
      const int target = x > 0 ? to.edge(image).to : to.edge(image).from;
      if (f.vertex_map[h.other] < 0) {
        f.vertex_map[h.other] = target;
        frontier.push(h.other);
      } else if (f.vertex_map[h.other] != target) {
        return std::nullopt;
      }
    }
  }
  return f;
}

bool factors_through(const LabeledGraph& from, const LabeledGraph& to) {
  return based_morphism(from, to).has_value();
}

}  // namespace pirank
