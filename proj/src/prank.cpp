#include "pirank/prank.hpp"

#include <algorithm>
#include <unordered_set>

#include "pirank/error.hpp"
#include "pirank/whitehead.hpp"

namespace pirank {

namespace {

// Quotients of the w-cycle, folded as they are formed. Vertex i of the cycle
// is the initial vertex of letter i. Each class keeps one slot per letter
// holding some vertex reached by reading that letter; two filled slots for
// the same letter in a merged class force a further merge. Every change is
// trailed so that branches can be undone.
class CycleQuotients {
 public:
  CycleQuotients(const Word& w, int rank, std::uint64_t budget)
      : w_(w), n_(static_cast<int>(w.size())), rank_(rank), stride_(2 * rank), budget_(budget),
        parent_(n_), size_(n_, 1), min_(n_), slot_(n_ * stride_, -1) {
    for (int i = 0; i < n_; ++i) {
      parent_[i] = i;
      min_[i] = i;
    }
    for (int i = 0; i < n_; ++i) {
      const int next = (i + 1) % n_;
      slot_[i * stride_ + letter_index(w_[i])] = next;
      slot_[next * stride_ + letter_index(-w_[i])] = i;
    }
  }

  std::vector<QuotientCandidate> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void set(int& cell, int value) {
    trail_.emplace_back(&cell, cell);
    cell = value;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      *trail_.back().first = trail_.back().second;
      trail_.pop_back();
    }
  }

  // Joins the classes of a and b and folds. With `limit` >= 0, fails when
  // two classes that both contain a vertex <= limit would be joined.
  bool merge(int a, int b, int limit) {
    pending_.clear();
    pending_.emplace_back(a, b);
    bool first = true;
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      int rx = find(x);
      int ry = find(y);
      if (rx == ry) continue;
      if (!first && min_[rx] <= limit && min_[ry] <= limit) return false;
      first = false;
      if (size_[rx] < size_[ry]) std::swap(rx, ry);
      set(parent_[ry], rx);
      set(size_[rx], size_[rx] + size_[ry]);
      if (min_[ry] < min_[rx]) set(min_[rx], min_[ry]);
      for (int k = 0; k < stride_; ++k) {
        const int t = slot_[ry * stride_ + k];
        if (t < 0) continue;
        int& s = slot_[rx * stride_ + k];
        if (s < 0) {
          set(s, t);
        } else {
          pending_.emplace_back(s, t);
        }
      }
    }
    return true;
  }

  void descend(int i) {
    if (++nodes_ > budget_) {
      fail(ErrorKind::budget, "partition budget of " + std::to_string(budget_) + " nodes exhausted");
    }
    if (i == n_) {
      leaf();
      return;
    }
    if (min_[find(i)] < i) {
      descend(i + 1);
      return;
    }
    for (std::size_t j = 0; j < leaders_.size(); ++j) {
      const std::size_t mark = trail_.size();
      if (merge(leaders_[j], i, i)) descend(i + 1);
      undo(mark);
    }
    leaders_.push_back(i);
    descend(i + 1);
    leaders_.pop_back();
  }

  void leaf() {
    const int classes = static_cast<int>(leaders_.size());
    index_.assign(n_, -1);
    for (int j = 0; j < classes; ++j) index_[find(leaders_[j])] = j;
    cover_.assign(classes * rank_, 0);
    for (int i = 0; i < n_; ++i) {
      const Letter x = w_[i];
      const int source = x > 0 ? i : (i + 1) % n_;
      ++cover_[index_[find(source)] * rank_ + generator(x) - 1];
    }
    for (int c : cover_) {
      if (c == 1) return;
    }
    LabeledGraph g(classes);
    for (int j = 0; j < classes; ++j) {
      const int root = find(leaders_[j]);
      for (int label = 1; label <= rank_; ++label) {
        const int t = slot_[root * stride_ + letter_index(label)];
        if (t >= 0) g.add_edge(j, index_[find(t)], label);
      }
    }
    g.set_base(0);
    if (!seen_.insert(canonical_form(g)).second) return;
    const int rank = g.num_edges() - g.num_vertices() + 1;
    found_.push_back({std::move(g), rank});
  }

  Word w_;
  int n_;
  int rank_;
  int stride_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> min_;
  std::vector<int> slot_;
  std::vector<std::pair<int*, int>> trail_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<int> leaders_;
  std::vector<int> index_;
  std::vector<int> cover_;
  std::unordered_set<std::string> seen_;
  std::vector<QuotientCandidate> found_;
};

Word checked_core(const Word& w, int rank) {
  const Alphabet alphabet(rank);
  for (Letter x : w) {
    if (!alphabet.contains(x)) fail(ErrorKind::malformed_input, "word " + to_string(w) + " exceeds rank " + std::to_string(rank));
  }
  return cyclic_reduce(w).core;
}

}  // namespace

std::vector<QuotientCandidate> enumerate_quotients(const Word& w, int rank, const EnumerationOptions& options) {
  const Word core = checked_core(w, rank);
  if (core.empty()) fail(ErrorKind::domain, "enumerate_quotients: trivial word");
  return CycleQuotients(core, rank, options.budget).run();
}

PrimitivityRankReport primitivity_rank(const Word& w, int rank, const EnumerationOptions& options) {
  PrimitivityRankReport report;
  const CyclicReduction cr = cyclic_reduce(w);
  report.core = checked_core(w, rank);
  report.conjugator = cr.conjugator;
  if (report.core.empty()) {
    report.trivial = true;
    report.pi = 0;
    return report;
  }
  report.proper_power = maximal_root(report.core).exponent > 1;
  if (is_primitive(report.core, rank)) {
    report.primitive = true;
    return report;
  }

  auto candidates = enumerate_quotients(report.core, rank, options);
  report.quotients = candidates.size();
  std::vector<WSubgroup> imprimitive;
  for (auto& c : candidates) {
    if (c.rank > rank) continue;
    const Lift lift = express_in_basis(c.graph, report.core);
    if (lift.status != LiftStatus::closed) {
      fail(ErrorKind::invariant, "w does not lift closed to one of its own quotients");
    }
    if (is_primitive(lift.in_basis, c.rank)) continue;
    if (report.pi && c.rank > *report.pi) continue;
    if (!report.pi || c.rank < *report.pi) {
      report.pi = c.rank;
      imprimitive.clear();
    }
    imprimitive.push_back({std::move(c.graph), c.rank, lift.in_basis, {}});
  }
  if (!report.pi) {
    fail(ErrorKind::invariant, "imprimitive word " + to_string(report.core) + " has no imprimitive quotient of rank <= " + std::to_string(rank));
  }
  if ((*report.pi == 1) != report.proper_power) {
    fail(ErrorKind::invariant, "pi = 1 disagrees with the proper power test for " + to_string(report.core));
  }

  for (std::size_t i = 0; i < imprimitive.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < imprimitive.size() && maximal; ++j) {
      if (i != j && factors_through(imprimitive[i].graph, imprimitive[j].graph)) maximal = false;
    }
    if (!maximal) continue;
    WSubgroup s = imprimitive[i];
    if (in_proper_free_factor(s.w_in_basis, s.rank)) {
      fail(ErrorKind::invariant, "w lies in a proper free factor of a minimal-rank subgroup");
    }
    s.presentation = {s.rank, cyclic_reduce(s.w_in_basis).core};
    report.w_subgroups.push_back(std::move(s));
  }
  return report;
}

std::optional<WSubgroup> peripheral_subgroup(const PrimitivityRankReport& report) {
  if (report.pi != 2) return std::nullopt;
  if (report.w_subgroups.size() != 1) {
    fail(ErrorKind::invariant, std::to_string(report.w_subgroups.size()) + " maximal rank-two w-subgroups found, expected exactly one");
  }
  return report.w_subgroups.front();
}

Verdict negative_immersions_verdict(const PrimitivityRankReport& report) {
  if (report.trivial || report.primitive || !report.pi) return Verdict::primitive_or_trivial;
  if (*report.pi == 1) return Verdict::torsion;
  if (*report.pi == 2) return Verdict::nonpositive_only;
  return Verdict::negative;
}

Verdict negative_immersions_verdict(const Word& w, int rank) {
  return negative_immersions_verdict(primitivity_rank(w, rank));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::negative: return "negative";
    case Verdict::nonpositive_only: return "nonpositive-only";
    case Verdict::torsion: return "torsion";
    case Verdict::primitive_or_trivial: return "primitive/trivial";
  }
  return "?";
}

std::string pi_string(const std::optional<int>& pi) { return pi ? std::to_string(*pi) : "inf"; }

}  // namespace pirank
