#include "fareyprim/word.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace fareyprim {

namespace {

[[maybe_unused]] bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == inverse(letters[i - 1])) return false;
  }
  return true;
}

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == inverse(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

// Knuth-Morris-Pratt failure table.
std::vector<std::size_t> failure_table(std::span<const Letter> pattern) {
  std::vector<std::size_t> fail(pattern.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

bool contains(std::span<const Letter> text, std::span<const Letter> pattern) {
  if (pattern.empty()) return true;
  const auto fail = failure_table(pattern);
  std::size_t k = 0;
  for (Letter c : text) {
    while (k > 0 && c != pattern[k]) k = fail[k - 1];
    if (c == pattern[k]) ++k;
    if (k == pattern.size()) return true;
  }
  return false;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters)
    : Word(normalize(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word Word::normalize(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) push_reduced(stack, l);
  return Word(std::move(stack));
}

Word Word::from_reduced(std::vector<Letter> letters) {
  assert(is_reduced(letters));
  return Word(std::move(letters));
}

Word concat(const Word& u, const Word& v) {
  // Only the junction can cancel.
  std::size_t cancel = 0;
  while (cancel < u.size() && cancel < v.size() &&
         v[cancel] == inverse(u[u.size() - 1 - cancel])) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * cancel);
  out.insert(out.end(), u.begin(), u.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(cancel), v.end());
  return Word::from_reduced(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word::from_reduced(std::move(out));
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word::from_reduced(std::move(out));
}

bool is_palindrome(const Word& w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.letters().rbegin());
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != inverse(w.back());
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  const std::size_t n = w.size();
  while (2 * k + 1 < n && w[k] == inverse(w[n - 1 - k])) ++k;
  auto first = w.letters().begin();
  std::vector<Letter> core(first + static_cast<std::ptrdiff_t>(k),
                           first + static_cast<std::ptrdiff_t>(n - k));
  std::vector<Letter> conj(first, first + static_cast<std::ptrdiff_t>(k));
  return {Word::from_reduced(std::move(core)), Word::from_reduced(std::move(conj))};
}

bool cyclic_equal(const Word& u, const Word& v) {
  const Word cu = cyclic_reduce(u).core;
  const Word cv = cyclic_reduce(v).core;
  if (cu.size() != cv.size()) return false;
  std::vector<Letter> doubled;
  doubled.reserve(2 * cu.size());
  doubled.insert(doubled.end(), cu.begin(), cu.end());
  doubled.insert(doubled.end(), cu.begin(), cu.end());
  return contains(doubled, cv.letters());
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  shift %= w.size();
  std::vector<Letter> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return Word::normalize(out);
}

std::size_t count_palindromic_rotations(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 1;
  // Manacher over w w; rotation k is the window [k, k + n).
  std::vector<Letter> s(w.begin(), w.end());
  s.insert(s.end(), w.begin(), w.end());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(s.size());
  std::vector<std::ptrdiff_t> odd(s.size()), even(s.size());
  for (std::ptrdiff_t i = 0, l = 0, r = -1; i < m; ++i) {
    std::ptrdiff_t k = (i > r) ? 1 : std::min(odd[l + r - i], r - i + 1);
    while (i - k >= 0 && i + k < m && s[i - k] == s[i + k]) ++k;
    odd[i] = k;
    if (i + k - 1 > r) { l = i - k + 1; r = i + k - 1; }
  }
  for (std::ptrdiff_t i = 0, l = 0, r = -1; i < m; ++i) {
    std::ptrdiff_t k = (i > r) ? 0 : std::min(even[l + r - i + 1], r - i + 1);
    while (i - k - 1 >= 0 && i + k < m && s[i - k - 1] == s[i + k]) ++k;
    even[i] = k;
    if (i + k - 1 > r) { l = i - k; r = i + k - 1; }
  }
  const auto len = static_cast<std::ptrdiff_t>(n);
  std::size_t count = 0;
  for (std::ptrdiff_t k = 0; k < len; ++k) {
    if (len % 2 == 1) {
      if (odd[k + len / 2] >= (len + 1) / 2) ++count;
    } else {
      if (even[k + len / 2] >= len / 2) ++count;
    }
  }
  return count;
}

ExponentSums exponent_sums(const Word& w) {
  ExponentSums sums;
  for (Letter l : w) {
    (generator(l) == Generator::a ? sums.a : sums.b) += sign(l);
  }
  return sums;
}

Word power(const Word& w, std::int64_t t) {
  if (t == 0 || w.empty()) return {};
  const Word base = t > 0 ? w : invert(w);
  const auto [core, conj] = cyclic_reduce(base);
  // conj * core^t * conj^-1, with no cancellation between copies of core.
  std::vector<Letter> body;
  const auto reps = static_cast<std::size_t>(t > 0 ? t : -t);
  body.reserve(core.size() * reps);
  for (std::size_t i = 0; i < reps; ++i) body.insert(body.end(), core.begin(), core.end());
  return conjugate(Word::from_reduced(std::move(body)), conj);
}

Word substitute(const Word& w, const Word& x, const Word& y) {
  const Word xi = invert(x);
  const Word yi = invert(y);
  std::vector<Letter> out;
  for (Letter l : w) {
    const Word& image = l == Letter::a ? x : l == Letter::A ? xi : l == Letter::b ? y : yi;
    for (Letter c : image) push_reduced(out, c);
  }
  return Word::from_reduced(std::move(out));
}

Word conjugate(const Word& w, const Word& g) { return concat(concat(g, w), invert(g)); }

}  // namespace fareyprim
