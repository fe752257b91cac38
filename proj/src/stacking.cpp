#include "pirank/stacking.hpp"

#include <algorithm>
#include <sstream>

#include "pirank/error.hpp"
#include "pirank/union_find.hpp"

namespace pirank {

namespace {

// Orders on vertex fibers as a matrix of pairwise relations: rel[x*n+y] is
// 1 when x is below y, -1 when above, 0 while undecided. Two edges over the
// same Omega edge tie the relation of their initial vertices to that of
// their terminal vertices, so oriented pairs fall into classes that are
// decided together.
class StackingSearch {
 public:
  StackingSearch(const LabeledGraph& s, const GraphMorphism& w, std::uint64_t budget)
      : s_(s), w_(w), n_(s.num_vertices()), budget_(budget), pairs_(n_ * n_) {
    for (int e = 0; e < s.num_edges(); ++e) {
      for (int f = e + 1; f < s.num_edges(); ++f) {
        if (w.edge_map[e] != w.edge_map[f]) continue;
        const Edge& a = s.edge(e);
        const Edge& b = s.edge(f);
        pairs_.unite(a.from * n_ + b.from, a.to * n_ + b.to);
        pairs_.unite(b.from * n_ + a.from, b.to * n_ + a.to);
      }
    }
    members_.resize(n_ * n_);
    class_.resize(n_ * n_);
    for (int p = 0; p < n_ * n_; ++p) class_[p] = pairs_.find(p);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (x != y && w.vertex_map[x] == w.vertex_map[y]) members_[class_[x * n_ + y]].push_back(x * n_ + y);
      }
    }
    // Largest fibers first.
    std::map<int, std::vector<int>> fibers;
    for (int x = 0; x < n_; ++x) fibers[w.vertex_map[x]].push_back(x);
    std::vector<std::vector<int>> by_size;
    for (auto& [cell, f] : fibers) by_size.push_back(f);
    std::stable_sort(by_size.begin(), by_size.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& f : by_size) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) order_.push_back(f[i] * n_ + f[j]);
      }
    }
  }

  std::optional<Stacking> run() {
    for (int p : order_) {
      const int x = p / n_;
      const int y = p % n_;
      if (class_[x * n_ + y] == class_[y * n_ + x]) return std::nullopt;
    }
    std::vector<signed char> rel(n_ * n_, 0);
    if (!solve(rel)) return std::nullopt;
    return extract(rel);
  }

 private:
  bool assign(std::vector<signed char>& rel, int x, int y) const {
    std::vector<int> facts{x * n_ + y};
    while (!facts.empty()) {
      const int p = facts.back();
      facts.pop_back();
      if (rel[p] == 1) continue;
      if (rel[p] == -1) return false;
      for (int q : members_[class_[p]]) {
        const int a = q / n_;
        const int b = q % n_;
        if (rel[q] == 1) continue;
        if (rel[q] == -1) return false;
        rel[q] = 1;
        rel[b * n_ + a] = -1;
        for (int z = 0; z < n_; ++z) {
          if (rel[z * n_ + a] == 1 && rel[z * n_ + b] != 1) facts.push_back(z * n_ + b);
          if (rel[b * n_ + z] == 1 && rel[a * n_ + z] != 1) facts.push_back(a * n_ + z);
        }
      }
    }
    return true;
  }

  bool solve(std::vector<signed char>& rel) {
    if (++nodes_ > budget_) fail(ErrorKind::budget, "stacking search budget of " + std::to_string(budget_) + " nodes exhausted");
    auto open = std::find_if(order_.begin(), order_.end(), [&](int p) { return rel[p] == 0; });
    if (open == order_.end()) return true;
    const int x = *open / n_;
    const int y = *open % n_;
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      std::vector<signed char> next = rel;
      if (assign(next, a, b) && solve(next)) {
        rel = std::move(next);
        return true;
      }
    }
    return false;
  }

  Stacking extract(const std::vector<signed char>& rel) const {
    Stacking st;
    auto below = [&](int x) {
      int count = 0;
      for (int z = 0; z < n_; ++z) count += rel[z * n_ + x] == 1;
      return count;
    };
    for (int x = 0; x < n_; ++x) st.vertex_orders[w_.vertex_map[x]].push_back(x);
    for (auto& [cell, fiber] : st.vertex_orders) {
      std::sort(fiber.begin(), fiber.end(), [&](int a, int b) { return below(a) < below(b); });
    }
    for (int e = 0; e < s_.num_edges(); ++e) st.edge_orders[w_.edge_map[e]].push_back(e);
    for (auto& [cell, fiber] : st.edge_orders) {
      std::sort(fiber.begin(), fiber.end(), [&](int a, int b) { return below(s_.edge(a).from) < below(s_.edge(b).from); });
    }
    return st;
  }

  const LabeledGraph& s_;
  const GraphMorphism& w_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  UnionFind pairs_;
  std::vector<int> class_;
  std::vector<std::vector<int>> members_;
  std::vector<int> order_;
};

void require_immersion(const LabeledGraph& s, const GraphMorphism& w, const LabeledGraph& target) {
  if (!is_immersion(s, target, w)) fail(ErrorKind::domain, "stackings are defined for immersions only");
}

Word checked_core(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) fail(ErrorKind::domain, "the trivial word has no stacking");
  if (core.size() != w.size()) fail(ErrorKind::domain, "word " + to_string(w) + " is not cyclically reduced");
  return core;
}

}  // namespace

std::optional<Stacking> search_stacking(const LabeledGraph& s, const GraphMorphism& w,
                                        const LabeledGraph& target, const StackingOptions& options) {
  require_immersion(s, w, target);
  return StackingSearch(s, w, options.budget).run();
}

std::optional<Stacking> search_stacking(const Word& w, int rank, const StackingOptions& options) {
  const Word core = checked_core(w);
  const LabeledGraph s = word_to_cycle(core, Alphabet(rank));
  return search_stacking(s, morphism_to_rose(s), rose(rank), options);
}

Stacking find_stacking(const Word& w, int rank, const StackingOptions& options) {
  const Word core = checked_core(w);
  const auto root = maximal_root(core);
  if (root.exponent > 1) {
    fail(ErrorKind::domain, "word " + to_string(w) + " is a proper power (exponent " + std::to_string(root.exponent) +
                                "); stackings exist only for indivisible loops");
  }
  auto st = search_stacking(core, rank, options);
  if (!st) fail(ErrorKind::invariant, "no stacking found for the indivisible word " + to_string(w));
  return *st;
}

bool verify_stacking(const LabeledGraph& s, const GraphMorphism& w, const LabeledGraph& target, const Stacking& st) {
  if (!is_morphism(s, target, w)) fail(ErrorKind::malformed_input, "verify_stacking: map is not a morphism");
  std::map<int, std::vector<int>> vertex_fibers;
  std::map<int, std::vector<int>> edge_fibers;
  for (int x = 0; x < s.num_vertices(); ++x) vertex_fibers[w.vertex_map[x]].push_back(x);
  for (int e = 0; e < s.num_edges(); ++e) edge_fibers[w.edge_map[e]].push_back(e);
  auto same_cells = [](const std::map<int, std::vector<int>>& fibers, const std::map<int, std::vector<int>>& orders) {
    if (fibers.size() != orders.size()) return false;
    for (const auto& [cell, members] : fibers) {
      auto it = orders.find(cell);
      if (it == orders.end()) return false;
      std::vector<int> sorted = it->second;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != members) return false;
    }
    return true;
  };
  if (!same_cells(vertex_fibers, st.vertex_orders) || !same_cells(edge_fibers, st.edge_orders)) {
    fail(ErrorKind::malformed_input, "verify_stacking: fibers do not match the map");
  }
  std::vector<int> position(s.num_vertices());
  for (const auto& [cell, order] : st.vertex_orders) {
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  }
  for (const auto& [cell, order] : st.edge_orders) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const Edge& lo = s.edge(order[i]);
        const Edge& hi = s.edge(order[j]);
        if (position[lo.from] > position[hi.from] || position[lo.to] > position[hi.to]) return false;
      }
    }
  }
  return true;
}

bool verify_stacking(const Word& w, int rank, const Stacking& st) {
  const LabeledGraph s = word_to_cycle(w, Alphabet(rank));
  return verify_stacking(s, morphism_to_rose(s), rose(rank), st);
}

Stacking reversed(const Stacking& st) {
  Stacking out = st;
  for (auto& [cell, order] : out.vertex_orders) std::reverse(order.begin(), order.end());
  for (auto& [cell, order] : out.edge_orders) std::reverse(order.begin(), order.end());
  return out;
}

std::string to_text(const Stacking& st, const LabeledGraph& target) {
  std::ostringstream out;
  for (const auto& [cell, order] : st.vertex_orders) {
    out << "fiber v" << cell;
    for (int x : order) out << ' ' << x;
    out << '\n';
  }
  for (const auto& [cell, order] : st.edge_orders) {
    const int label = target.edge(cell).label;
    out << "fiber ";
    if (label > 0) {
      out << letter_name(label);
    } else {
      out << 'e' << cell;
    }
    for (int e : order) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace pirank
