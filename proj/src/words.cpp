#include "pirank/words.hpp"

#include <algorithm>
#include <cctype>

#include "pirank/error.hpp"

namespace pirank {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > 26) {
    fail(ErrorKind::malformed_input, "alphabet rank must be in 1..26, got " + std::to_string(rank));
  }
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(2 * rank_);
  for (int i = 0; i < 2 * rank_; ++i) out.push_back(letter_from_index(i));
  return out;
}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter x : raw) {
    if (!stack.empty() && stack.back() == -x) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = -x;
  return Word(std::move(out));
}

bool Word::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, generator(x));
  return m;
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(out));
}

Word Word::power(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Letter> raw;
  for (int i = 0; i < std::abs(k); ++i) raw.insert(raw.end(), base.begin(), base.end());
  return reduce(raw);
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> raw = lhs.letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word::reduce(raw);
}

char letter_name(Letter x) {
  const int g = generator(x);
  if (g < 1 || g > 26) return '?';
  return static_cast<char>(x > 0 ? 'a' + g - 1 : 'A' + g - 1);
}

std::string to_string(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter x : letters) out.push_back(letter_name(x));
  return out;
}

std::string to_string(const Word& w) { return to_string(std::span<const Letter>(w.letters())); }

std::vector<Letter> parse_letters(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    Letter x = 0;
    if (c >= 'a' && c <= 'z') x = c - 'a' + 1;
    if (c >= 'A' && c <= 'Z') x = -(c - 'A' + 1);
    if (x == 0 || !alphabet.contains(x)) {
      fail(ErrorKind::malformed_input, std::string("unknown letter '") + c + "' for rank " +
                                           std::to_string(alphabet.rank()));
    }
    raw.push_back(x);
  }
  return raw;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Word::reduce(parse_letters(text, alphabet));
}

int infer_rank(std::string_view text) {
  int rank = 1;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      rank = std::max(rank, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
    }
  }
  return rank;
}

Word parse_word(std::string_view text) { return parse_word(text, Alphabet(infer_rank(text))); }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& x = w.letters();
  std::size_t lo = 0;
  std::size_t hi = x.size();
  while (hi - lo >= 2 && x[lo] == -x[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(x.begin() + static_cast<std::ptrdiff_t>(lo),
                           x.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> conj(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(lo));
  return {Word::reduce(core), Word::reduce(conj)};
}

RootDecomposition maximal_root(const Word& w) {
  if (w.empty()) fail(ErrorKind::domain, "maximal_root: the empty word has no root");
  if (!w.is_cyclically_reduced()) fail(ErrorKind::domain, "maximal_root: word must be cyclically reduced");
  const std::size_t n = w.size();
  const auto& x = w.letters();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + d < n && periodic; ++i) periodic = x[i] == x[i + d];
    if (periodic) {
      std::vector<Letter> root(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(d));
      return {Word::reduce(root), static_cast<int>(n / d)};
    }
  }
  return {w, 1};
}

Word cyclic_normal_form(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  const Word inv = w.inverse();
  for (std::size_t k = 0; k < w.size(); ++k) {
    best = std::min({best, w.rotated(k), inv.rotated(k)});
  }
  return best;
}

int rational_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> m(rows.size(), std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    // Bareiss step: every division below is exact.
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

int abelianization_kernel_rank(std::span<const Word> images, const Alphabet& ambient) {
  std::vector<std::vector<long long>> rows;
  rows.reserve(images.size());
  for (const Word& w : images) {
    std::vector<long long> row(static_cast<std::size_t>(ambient.rank()), 0);
    for (Letter x : w) {
      if (!ambient.contains(x)) {
        fail(ErrorKind::malformed_input, "image word uses a letter outside the ambient alphabet");
      }
      row[static_cast<std::size_t>(generator(x) - 1)] += x > 0 ? 1 : -1;
    }
    rows.push_back(std::move(row));
  }
  return static_cast<int>(images.size()) - rational_rank(std::move(rows));
}

}  // namespace pirank
