// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/fsequence.hpp"
#include "fareyprim/primitivity.hpp"
#include "fareyprim/report.hpp"
#include "fareyprim/word_format.hpp"
#include "oracles.hpp"

using namespace fareyprim;

namespace {

// Every criterion records its first few problems here.
struct Findings {
  std::size_t checked = 0;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

Word tex(const std::string& s) { return Word::normalize(oracle::tex(s)); }
Rational r(std::int64_t p, std::int64_t q) { return make_rational(p, q); }

std::vector<std::string> split_cdot(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find("\\cdot", start)) != std::string::npos; start = pos + 5) {
    out.push_back(s.substr(start, pos - start));
  }
  out.push_back(s.substr(start));
  return out;
}

// Table rows, transcribed in TeX notation: x, parents, parity,
// parental product, simplified word.
void table_rows(Findings& f) {
  const std::vector<std::tuple<Rational, Rational, Rational, const char*, const char*, const char*>> rows = {
      {r(1, 2), r(0, 1), r(1, 1), "even", "A^{-1} \\cdot BA^{-1}", "A^{-1}BA^{-1}"},
      {r(2, 1), r(1, 1), Rational::infinity(), "even", "BA^{-1} \\cdot B", "BA^{-1}B"},
      {r(1, 3), r(1, 2), r(0, 1), "odd", "A^{-1}BA^{-1} \\cdot A^{-1}", "A^{-1}BA^{-2}"},
      {r(2, 5), r(1, 3), r(1, 2), "even", "A^{-1}BA^{-2}\\cdot A^{-1}BA^{-1}", "A^{-1}BA^{-3}BA^{-1}"},
      {r(1, 4), r(1, 3), r(0, 1), "even", "A^{-1} \\cdot A^{-1}BA^{-2}", "A^{-2}BA^{-2}"},
      {r(2, 7), r(1, 4), r(1, 3), "even", "A^{-2}BA^{-2} \\cdot A^{-1}BA^{-2}", "A^{-2}BA^{-3}BA^{-2}"},
  };
  const auto table = enumeration_table(5, SignFilter::Positive);
  for (const auto& [x, p1, p2, par, product, simplified] : rows) {
    const TableRow* row = nullptr;
    for (const auto& t : table) {
      if (t.fraction == x) row = &t;
    }
    f.require(row != nullptr, to_string(x) + " missing from table");
    if (!row) continue;
    f.require(row->parents.has_value(), to_string(x) + " has no parents");
    if (!row->parents) continue;
    const std::set<std::string> want{to_string(p1), to_string(p2)};
    const std::set<std::string> got{to_string(row->parents->left), to_string(row->parents->right)};
    f.require(want == got, to_string(x) + " parents " + parents_text(*row));
    f.require(to_string(row->parity) == par, to_string(x) + " parity");
    const auto factors = split_cdot(product);
    f.require(factors.size() == 2 && tex(factors[0]) == row->left_word && tex(factors[1]) == row->right_word,
              to_string(x) + " parental product " + product_text(*row));
    f.require(tex(simplified) == row->word, to_string(x) + " simplified " + format_caret(row->word));
    // The printed caret form must describe the same word.
    f.require(parse_word(format_caret(row->word)) == tex(simplified), to_string(x) + " printed form");
  }
}

void e319(Findings& f) {
  const Word boldface = tex(
      "B^2A^{-1}B^3A^{-1}B^2 \\cdot B^2A^{-1}B^3A^{-1}B^2 \\cdot   B^2A^{-1}B^3A^{-1}B^3A^{-1}B^2 "
      "\\cdot B^2A^{-1}B^3A^{-1}B^2");
  const Word e = enumerate_word(r(31, 9));
  f.require(e == boldface, "E(31/9) = " + format_caret(e));
  f.require(e.size() == 40, "length");
  const auto sums = exponent_sums(e);
  f.require(sums.a == -9 && sums.b == 31, "exponent sums");
  const auto fac = factorization(r(31, 9));
  f.require(fac.kind == FactorCase::OddProduct && fac.left == r(7, 2) && fac.right == r(24, 7), "factorization");
  f.require(tex("BBA^{-1}B\\cdot BBA^{-1}BB") == enumerate_word(r(7, 2)), "E(7/2)");
  f.require(tex("B^2A^{-1}B^3A^{-1}B^2 \\cdot B^2A^{-1}B^3A^{-1}B^3A^{-1}B^2 \\cdot B^2A^{-1}B^3A^{-1}B^2") ==
                enumerate_word(r(24, 7)),
            "E(24/7)");
  f.require(conjugacy_bridge(r(31, 9)).holds(), "bridge");

  const Word fw = tex("A^{-1}B^3 \\cdot (BA^{-1}B^3A^{-1}B^3)^4");
  f.require(fword(CFSeq{3, 2, 4}) == fw, "F-word of [3,2,4]");
  const Word step1 = concat(concat(tex("B^{-1}"), e), tex("B"));
  f.require(step1 == tex("BA^{-1}B^3A^{-1}B^3 \\cdot BA^{-1}B^3A^{-1}B^3 \\cdot BA^{-1}B^3A^{-1}B^3 "
                           "\\cdot A^{-1}B^3 \\cdot BA^{-1}B^3A^{-1}B^3"),
            "conjugate by B^-1 and regroup");
  const Word g = power(tex("BA^{-1}B^3A^{-1}B^3"), -3);
  f.require(concat(concat(g, step1), invert(g)) == fw, "conjugate by (BA^-1B^3A^-1B^3)^-3");
}

void for_positive_sequences(std::int64_t bound, const std::function<void(const CFSeq&)>& fn) {
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> extend = [&](std::int64_t left) {
    for (std::int64_t e = 1; e <= left; ++e) {
      cur.push_back(e);
      fn(CFSeq{cur});
      extend(left - e);
      cur.pop_back();
    }
  };
  for (std::int64_t a0 = 0; a0 <= bound; ++a0) {
    cur = {a0};
    fn(CFSeq{cur});
    extend(bound - a0);
  }
}

void winding(Findings& f) {
  const GenPair std_pair = GenPair::standard();
  const auto forward = apply_sequence(std_pair, CFSeq{3, 2, 4});
  f.require(forward.size() == 3, "three steps");
  f.require(forward[0] == GenPair{tex("B^{-1}"), tex("A^{-1}B^3")}, "(A_1, B_1)");
  f.require(forward[1] == GenPair{tex("B^{-3}A"), tex("BA^{-1}B^3A^{-1}B^3")}, "(A_2, B_2)");
  const GenPair cd{tex("B^{-3}AB^{-3}AB^{-1}"), tex("A^{-1}B^3 \\cdot (BA^{-1}B^3A^{-1}B^3)^4")};
  f.require(forward[2] == cd, "(A_3, B_3)");
  f.require(apply_sequence(cd, CFSeq{-4, -2, -3}).back() == std_pair, "winding back to (A, B)");
  for_positive_sequences(12, [&](const CFSeq& s) {
    const auto there = apply_sequence(std_pair, s).back();
    f.require(apply_sequence(there, reverse_negate(s)).back() == std_pair, "round trip " + to_string(s));
  });
}

const std::vector<Rational>& corpus12() {
  static const auto xs = rationals_by_level(12, SignFilter::Both);
  return xs;
}

void palindromes(Findings& f) {
  Enumerator e;
  for (Rational x : corpus12()) {
    const auto w = oracle::letters(e.word(x));
    const std::int64_t p = x.num() < 0 ? -x.num() : x.num();
    const bool even = (p * x.den()) % 2 == 0;
    f.require(oracle::palindrome(w) == even, to_string(x) + " palindrome iff |p|q even");
    f.require(oracle::palindromic_rotations(w) == (even ? 1u : 0u), to_string(x) + " palindromic rotations");
    if (!even) {
      const auto pp = parent_product(x);
      const Scheme s = scheme_for(x);
      f.require(oracle::palindrome(oracle::letters(e.word(pp.left, s))) &&
                    oracle::palindrome(oracle::letters(e.word(pp.right, s))),
                to_string(x) + " odd factors are palindromes");
    }
  }
}

void structure(Findings& f) {
  Enumerator e;
  for (Rational x : corpus12()) {
    const Word& w = e.word(x);
    const auto letters = oracle::letters(w);
    const std::int64_t p = x.num() < 0 ? -x.num() : x.num();
    f.require(oracle::cyclic_core(letters) == letters, to_string(x) + " cyclically reduced");
    f.require(static_cast<std::int64_t>(w.size()) == p + x.den(), to_string(x) + " length");
    std::int64_t sa = 0, sb = 0;
    for (Letter l : letters) {
      const int v = static_cast<int>(l);
      (v == 1 || v == -1 ? sa : sb) += v > 0 ? 1 : -1;
    }
    const bool sums_ok = x.num() > 0 ? (sa == -x.den() && sb == p) : (sa == x.den() && sb == p);
    f.require(sums_ok, to_string(x) + " exponent sums");
    const auto pp = parent_product(x);
    const auto& l = e.word(pp.left, scheme_for(x));
    const auto& rr = e.word(pp.right, scheme_for(x));
    auto joined = oracle::letters(l);
    const auto right = oracle::letters(rr);
    joined.insert(joined.end(), right.begin(), right.end());
    f.require(joined == letters, to_string(x) + " factors concatenate without cancellation");
    try {
      f.require(classify_form(w).max_adjacent_gap <= 1, to_string(x) + " adjacent exponents");
    } catch (const NoFormError& err) {
      f.require(false, to_string(x) + " classify_form: " + err.what());
    }
  }
}

void primitive_pairs(Findings& f) {
  const auto report = verify_neighbor_pairs(10, SignFilter::Both);
  // 2 (2^10 - 1) + 1 neighbour pairs per sign.
  f.require(report.pairs_checked == 2 * (2 * 1023 + 1), "pair count " + std::to_string(report.pairs_checked));
  f.require(report.basis_count == report.pairs_checked, "every neighbour pair is a basis");
  for (const auto& fail : report.failures) {
    f.require(false, "(" + to_string(fail.left) + ", " + to_string(fail.right) + ") " + fail.reason);
  }

  oracle::Rng rng(2024);
  Enumerator e;
  const auto xs = rationals_by_level(10, SignFilter::Both);
  std::size_t controls = 0;
  while (controls < 1000) {
    const Rational x = xs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
    const Rational y = xs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
    if (x == y || is_neighbor(x, y) || (x.num() > 0) != (y.num() > 0)) continue;
    ++controls;
    const GenPair p{e.word(x), e.word(y)};
    const auto a = stallings_basis_check(p).verdict;
    const auto b = nielsen_reduce(p).verdict;
    f.require(a == b, "oracles disagree on (" + to_string(x) + ", " + to_string(y) + ")");
  }
}

void bridge(Findings& f) {
  for (Rational x : rationals_by_level(10, SignFilter::Both)) {
    f.require(conjugacy_bridge(x).holds(), to_string(x) + " bridge");
  }
}

void farey(Findings& f) {
  for (std::int64_t k = 1; k <= 12; ++k) {
    f.require(rationals_by_level(k, SignFilter::Positive).size() == (std::size_t{1} << k) - 1, "level count");
  }
  for (Rational x : corpus12()) {
    const CFSeq cf = to_cf(x);
    f.require(from_cf(cf) == x, to_string(x) + " CF round trip");
    std::int64_t sum = 0;
    for (auto a : cf.entries) sum += a < 0 ? -a : a;
    f.require(farey_level(x) == sum && sum == oracle::level(x.num(), x.den()), to_string(x) + " level");

    const auto ps = parents(x);
    f.require(is_neighbor(ps.smaller, x) && is_neighbor(ps.larger, x) && is_neighbor(ps.smaller, ps.larger),
              to_string(x) + " parents are neighbours");
    if (x.num() > 0) {
      f.require(mediant(ps.smaller, ps.larger) == x, to_string(x) + " mediant");
      const auto bf = oracle::parents(x.num(), x.den());
      f.require(ps.smaller == make_rational(bf.first.p, bf.first.q) &&
                    ps.larger == make_rational(bf.second.p, bf.second.q),
                to_string(x) + " parents match brute force");
    } else {
      const auto m = parents(negate(x));
      f.require(ps.smaller == negate(m.larger) && ps.larger == negate(m.smaller), to_string(x) + " mirror parents");
    }
    const int odd = (parity(x) == Parity::Odd) + (parity(ps.smaller) == Parity::Odd) + (parity(ps.larger) == Parity::Odd);
    f.require(odd == 1, to_string(x) + " one odd vertex");

    const auto ap = approximants(cf);
    f.require(ap.back() == x, to_string(x) + " last approximant");
    for (std::size_t i = 0; i + 1 < ap.size(); ++i) {
      f.require(is_neighbor(ap[i], ap[i + 1]), to_string(x) + " consecutive approximants are neighbours");
    }
    for (std::size_t i = 0; i + 2 < ap.size(); ++i) {
      f.require(compare(ap[i], x) == -compare(ap[i + 1], x), to_string(x) + " approximants alternate");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*run)(Findings&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "examples table reproduction", 1.0, table_rows},
      {2, "E(31/9) reproduction and conjugators", 1.0, e319},
      {3, "winding round trip", 5.0, winding},
      {4, "parity/palindrome law to level 12", 30.0, palindromes},
      {5, "structural laws to level 12", 30.0, structure},
      {6, "primitive neighbour pairs to level 10", 60.0, primitive_pairs},
      {7, "conjugacy bridge to level 10", 30.0, bridge},
      {8, "Farey arithmetic to level 12", 5.0, farey},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Findings f;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(f);
    } catch (const std::exception& e) {
      f.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = f.failed == 0 && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s (%zu checks, %.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                f.checked, secs, c.limit_seconds);
    for (const auto& p : f.problems) std::printf("    %s\n", p.c_str());
    if (f.failed > f.problems.size()) std::printf("    ... %zu failures in total\n", f.failed);
    if (!in_time) std::printf("    over the time limit\n");
  }
  return failures == 0 ? 0 : 1;
}
