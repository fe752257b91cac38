#include "pirank/whitehead.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "pirank/error.hpp"

namespace pirank {

namespace {

bool in_subset(std::uint32_t subset, Letter x) { return (subset >> letter_index(x)) & 1u; }

void check_letters(const Word& w, int rank) {
  const Alphabet alphabet(rank);
  for (Letter x : w) {
    if (!alphabet.contains(x)) fail(ErrorKind::malformed_input, "word " + to_string(w) + " exceeds rank " + std::to_string(rank));
  }
}

std::vector<Word> prepare(std::span<const Word> tuple, int rank) {
  std::vector<Word> out;
  out.reserve(tuple.size());
  for (const Word& w : tuple) {
    check_letters(w, rank);
    out.push_back(cyclic_reduce(w).core);
  }
  return out;
}

int generators_used(const Word& w) {
  std::uint32_t seen = 0;
  for (Letter x : w) seen |= 1u << generator(x);
  return std::popcount(seen);
}

}  // namespace

Word apply_move(const WhiteheadMove& m, const Word& w) {
  const Letter a = m.multiplier;
  std::vector<Letter> raw;
  raw.reserve(3 * w.size());
  for (Letter y : w) {
    if (generator(y) == generator(a)) {
      raw.push_back(y);
      continue;
    }
    if (in_subset(m.subset, -y)) raw.push_back(-a);
    raw.push_back(y);
    if (in_subset(m.subset, y)) raw.push_back(a);
  }
  return cyclic_reduce(Word::reduce(raw)).core;
}

WhiteheadMove inverse(const WhiteheadMove& m) {
  const std::uint32_t a = 1u << letter_index(m.multiplier);
  const std::uint32_t a_inv = 1u << letter_index(-m.multiplier);
  return {-m.multiplier, (m.subset & ~a) | a_inv};
}

namespace {

std::vector<WhiteheadMove> generate_moves(int rank) {
  std::vector<WhiteheadMove> moves;
  const int letters = 2 * rank;
  for (int i = 0; i < letters; ++i) {
    const Letter a = letter_from_index(i);
    std::vector<int> others;
    for (int j = 0; j < letters; ++j) {
      if (generator(letter_from_index(j)) != generator(a)) others.push_back(j);
    }
    const std::uint32_t count = 1u << others.size();
    for (std::uint32_t bits = 1; bits < count; ++bits) {
      std::uint32_t subset = 1u << i;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if ((bits >> k) & 1u) subset |= 1u << others[k];
      }
      moves.push_back({a, subset});
    }
  }
  return moves;
}

constexpr int cached_ranks = 6;

}  // namespace

std::vector<WhiteheadMove> all_moves(int rank) {
  if (rank < 1 || rank > 15) fail(ErrorKind::domain, "Whitehead moves are enumerated for rank 1..15 only");
  return generate_moves(rank);
}

namespace {

const std::vector<WhiteheadMove>& moves_for(int rank, std::vector<WhiteheadMove>& scratch) {
  static const auto cache = [] {
    std::vector<std::vector<WhiteheadMove>> out(cached_ranks + 1);
    for (int r = 1; r <= cached_ranks; ++r) out[r] = generate_moves(r);
    return out;
  }();
  if (rank >= 1 && rank <= cached_ranks) return cache[rank];
  scratch = all_moves(rank);
  return scratch;
}

}  // namespace

Word relabel(const Word& w, std::span<const Letter> image) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter x : w) {
    const Letter y = image[generator(x) - 1];
    raw.push_back(x > 0 ? y : -y);
  }
  return Word::reduce(raw);
}

std::size_t cyclic_length(std::span<const Word> tuple) {
  std::size_t n = 0;
  for (const Word& w : tuple) n += cyclic_reduce(w).core.size();
  return n;
}

namespace {

// A cyclic word seen from a multiplier a: the letters that are not a^+-1,
// each followed by the signed length of the run of a's after it.
struct Gap {
  Letter before;
  int run;
  Letter after;
};

struct Profile {
  int other = 0;  // letters that are not a^+-1
  int pure_run = 0;  // total length when every letter is a^+-1
  std::vector<Gap> gaps;
};

Profile profile(const Word& w, Letter a) {
  Profile p;
  const std::size_t n = w.size();
  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (generator(w[i]) != generator(a)) {
      first = i;
      break;
    }
  }
  if (first == n) {
    p.pure_run = static_cast<int>(n);
    return p;
  }
  std::size_t i = first;
  do {
    const Letter y = w[i];
    int run = 0;
    std::size_t j = (i + 1) % n;
    while (generator(w[j]) == generator(a)) {
      run += w[j] == a ? 1 : -1;
      j = (j + 1) % n;
    }
    p.gaps.push_back({y, run, w[j]});
    ++p.other;
    i = j;
  } while (i != first);
  return p;
}

// Cyclic length of the image of a cyclically reduced word under (A, a):
// letters other than a^+-1 never cancel, so only the a-runs change.
int image_length(const Profile& p, std::uint32_t subset) {
  if (p.other == 0) return p.pure_run;
  int length = p.other;
  for (const Gap& g : p.gaps) {
    const int run = g.run + static_cast<int>(in_subset(subset, g.before)) - static_cast<int>(in_subset(subset, -g.after));
    length += run < 0 ? -run : run;
  }
  return length;
}

}  // namespace

MinimizationTrace whitehead_minimize(std::span<const Word> tuple, int rank) {
  MinimizationTrace trace;
  trace.start = prepare(tuple, rank);
  trace.end = trace.start;
  trace.length = cyclic_length(trace.end);
  std::vector<WhiteheadMove> scratch;
  const auto& moves = moves_for(rank, scratch);
  std::vector<std::vector<Profile>> profiles(2 * rank);
  for (;;) {
    for (int i = 0; i < 2 * rank; ++i) {
      profiles[i].clear();
      for (const Word& w : trace.end) profiles[i].push_back(profile(w, letter_from_index(i)));
    }
    std::size_t best_length = trace.length;
    const WhiteheadMove* best = nullptr;
    for (const WhiteheadMove& m : moves) {
      std::size_t length = 0;
      for (const Profile& p : profiles[letter_index(m.multiplier)]) length += image_length(p, m.subset);
      if (length < best_length) {
        best_length = length;
        best = &m;
      }
    }
    if (best == nullptr) break;
    trace.moves.push_back(*best);
    for (Word& w : trace.end) w = apply_move(*best, w);
    trace.length = best_length;
  }
  return trace;
}

Primitivity primitivity(const Word& w, int rank) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) return Primitivity::trivial;
  if (core.size() == 1) {
    check_letters(core, rank);
    return Primitivity::primitive;
  }
  const auto trace = whitehead_minimize(std::span<const Word>(&core, 1), rank);
  return trace.length == 1 ? Primitivity::primitive : Primitivity::imprimitive;
}

bool is_primitive(const Word& w, int rank) { return primitivity(w, rank) == Primitivity::primitive; }

std::vector<Letter> cyclic_shape(const Word& w) {
  const std::size_t n = w.size();
  std::vector<Letter> best;
  std::vector<Letter> current(n);
  std::vector<Letter> image;
  for (const Word& v : {w, w.inverse()}) {
    for (std::size_t start = 0; start < n; ++start) {
      image.assign(static_cast<std::size_t>(v.max_generator()) + 1, 0);
      int next = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Letter x = v[(start + i) % n];
        Letter& y = image[generator(x)];
        if (y == 0) y = x > 0 ? next++ : -(next++);
        current[i] = x > 0 ? y : -y;
      }
      if (best.empty() || current < best) best = current;
    }
  }
  return best;
}

bool in_proper_free_factor(const Word& w, int rank) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) fail(ErrorKind::domain, "in_proper_free_factor: trivial word");
  check_letters(core, rank);
  if (rank == 1) return false;
  const auto trace = whitehead_minimize(std::span<const Word>(&core, 1), rank);
  const Word start = trace.end.front();
  const std::size_t level = start.size();
  // Breadth-first search over the minimal level set.
  std::vector<WhiteheadMove> scratch;
  const auto& moves = moves_for(rank, scratch);
  std::set<std::vector<Letter>> seen{cyclic_shape(start)};
  std::vector<Profile> profiles(2 * rank);
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    const Word v = frontier.front();
    frontier.pop_front();
    if (generators_used(v) < rank) return true;
    for (int i = 0; i < 2 * rank; ++i) profiles[i] = profile(v, letter_from_index(i));
    for (const WhiteheadMove& m : moves) {
      if (image_length(profiles[letter_index(m.multiplier)], m.subset) != static_cast<int>(level)) continue;
      Word u = apply_move(m, v);
      if (u.size() != level) continue;
      if (seen.insert(cyclic_shape(u)).second) frontier.push_back(std::move(u));
    }
  }
  return false;
}

bool is_sub_basis(std::span<const Word> tuple, int rank) {
  if (static_cast<int>(tuple.size()) > rank) return false;
  for (const Word& w : tuple) {
    if (cyclic_reduce(w).core.empty()) return false;
  }
  const auto trace = whitehead_minimize(tuple, rank);
  std::uint32_t used = 0;
  for (const Word& w : trace.end) {
    if (w.size() != 1) return false;
    const std::uint32_t bit = 1u << generator(w[0]);
    if (used & bit) return false;
    used |= bit;
  }
  return true;
}

}  // namespace pirank
