#include "fareyprim/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/fsequence.hpp"
#include "fareyprim/primitivity.hpp"
#include "fareyprim/word_format.hpp"

namespace fareyprim {

namespace {

constexpr std::size_t kKeptMessages = 20;
constexpr std::uint64_t kSeed = 0x5eed'fa7e'0001ULL;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Counts one check; records `what()` when it fails.
  template <typename Describe>
  void expect(bool ok, Describe&& what) {
    ++result_.checked;
    if (ok) return;
    ++result_.failed;
    if (result_.failures.size() < kKeptMessages) result_.failures.push_back(what());
  }

  template <typename Body>
  void guarded(const std::string& label, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return label + ": " + e.what(); });
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

struct Context {
  std::int64_t max_level;
  unsigned threads;
  std::vector<Rational> corpus;  // both signs, level 1..max_level
  Enumerator enumerator;
};

std::string s(Rational x) { return to_string(x); }

// Positive F-sequences a0 >= 0, a_i >= 1 (i > 0), entry sum <= bound, length >= 1.
std::vector<CFSeq> positive_sequences(std::int64_t bound) {
  std::vector<CFSeq> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> extend = [&](std::int64_t left) {
    for (std::int64_t e = 1; e <= left; ++e) {
      cur.push_back(e);
      out.push_back(CFSeq{cur});
      extend(left - e);
      cur.pop_back();
    }
  };
  for (std::int64_t a0 = 0; a0 <= bound; ++a0) {
    cur = {a0};
    out.push_back(CFSeq{cur});
    extend(bound - a0);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  static constexpr Letter kLetters[] = {Letter::a, Letter::A, Letter::b, Letter::B};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> raw(len(rng));
  for (auto& l : raw) l = kLetters[pick(rng)];
  return Word::normalize(raw);
}

void word_laws(Context&, Suite& suite) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = random_word(rng, 24);
    const Word v = random_word(rng, 24);
    const Word w = random_word(rng, 24);
    const auto show = [&] { return format_caret(u) + " / " + format_caret(v); };
    suite.expect(concat(concat(u, v), w) == concat(u, concat(v, w)), show);
    suite.expect(invert(concat(u, v)) == concat(invert(v), invert(u)), show);
    suite.expect(concat(u, invert(u)).empty(), show);
    suite.expect(parse_word(format_caret(u)) == u, show);
    suite.expect(parse_word(format_compact(u)) == u, show);
    const auto red = cyclic_reduce(u);
    suite.expect(conjugate(red.core, red.conjugator) == u && is_cyclically_reduced(red.core), show);
    if (!red.core.empty()) {
      const std::size_t shift = static_cast<std::size_t>(trial) % red.core.size();
      suite.expect(cyclic_equal(u, rotate(red.core, shift)), show);
      suite.expect(cyclic_equal(u, conjugate(u, v)), show);
    }
    const auto su = exponent_sums(u);
    const auto sv = exponent_sums(v);
    const auto suv = exponent_sums(concat(u, v));
    suite.expect(suv.a == su.a + sv.a && suv.b == su.b + sv.b, show);
  }
}

void farey_arithmetic(Context& ctx, Suite& suite) {
  for (std::int64_t k = 1; k <= ctx.max_level; ++k) {
    suite.expect(rationals_by_level(k, SignFilter::Positive).size() ==
                     (std::size_t{1} << k) - 1,
                 [&] { return "positive count at level " + std::to_string(k); });
  }
  for (Rational x : ctx.corpus) {
    suite.guarded(s(x), [&] {
      const CFSeq cf = to_cf(x);
      suite.expect(from_cf(cf) == x, [&] { return s(x) + " CF round trip"; });
      std::int64_t sum = 0;
      for (auto e : cf.entries) sum += e < 0 ? -e : e;
      suite.expect(farey_level(x) == sum, [&] { return s(x) + " level"; });

      const auto ps = parents(x);
      suite.expect(is_neighbor(ps.smaller, x) && is_neighbor(ps.larger, x) &&
                       is_neighbor(ps.smaller, ps.larger),
                   [&] { return s(x) + " parents are not mutual neighbours"; });
      suite.expect(farey_level(ps.smaller) < farey_level(x) && farey_level(ps.larger) < farey_level(x),
                   [&] { return s(x) + " parent levels"; });
      if (x.num() > 0) {
        suite.expect(compare(ps.smaller, x) < 0 && compare(x, ps.larger) < 0,
                     [&] { return s(x) + " parents do not bracket x"; });
        suite.expect(mediant(ps.smaller, ps.larger) == x, [&] { return s(x) + " mediant"; });
      } else {
        // 1/0 sits at -infinity here; the mirror image carries the order checks.
        const auto mirror = parents(negate(x));
        suite.expect(ps.smaller == negate(mirror.larger) && ps.larger == negate(mirror.smaller),
                     [&] { return s(x) + " parents are not the mirror of those of -x"; });
      }

      int odd = (parity(x) == Parity::Odd) + (parity(ps.smaller) == Parity::Odd) +
                (parity(ps.larger) == Parity::Odd);
      suite.expect(odd == 1, [&] { return s(x) + " triangle has " + std::to_string(odd) + " odd vertices"; });

      const auto approx = approximants(cf);
      suite.expect(!approx.empty() && approx.back() == x, [&] { return s(x) + " last approximant"; });
      for (std::size_t i = 0; i + 1 < approx.size(); ++i) {
        suite.expect(is_neighbor(approx[i], approx[i + 1]),
                     [&] { return s(x) + " approximants " + std::to_string(i) + " not neighbours"; });
      }
      for (std::size_t i = 0; i + 2 < approx.size(); ++i) {
        suite.expect(compare(approx[i], x) == -compare(approx[i + 1], x),
                     [&] { return s(x) + " approximants do not alternate at " + std::to_string(i); });
      }
    });
  }
}

void length_law(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    const auto len = static_cast<std::int64_t>(ctx.enumerator.word(x).size());
    const std::int64_t p = x.num() < 0 ? -x.num() : x.num();
    suite.expect(len == p + x.den(), [&] { return s(x) + " has length " + std::to_string(len); });
  }
}

void exponent_sum_law(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    const auto e = exponent_sums(ctx.enumerator.word(x));
    const bool ok = x.num() > 0 ? (e.a == -x.den() && e.b == x.num())
                                : (e.a == x.den() && e.b == -x.num());
    suite.expect(ok, [&] {
      return s(x) + " sums (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    });
  }
}

void cyclic_reduction(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    suite.expect(is_cyclically_reduced(ctx.enumerator.word(x)),
                 [&] { return s(x) + " not cyclically reduced"; });
  }
}

void no_cancellation(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    const auto pp = parent_product(x);
    const Word& l = ctx.enumerator.word(pp.left, scheme_for(x));
    const Word& r = ctx.enumerator.word(pp.right, scheme_for(x));
    const Word& w = ctx.enumerator.word(x);
    suite.expect(l.size() + r.size() == w.size() && concat(l, r) == w,
                 [&] { return s(x) + " factors cancel or do not multiply to E"; });
  }
}

void palindrome_parity(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    suite.guarded(s(x), [&] {
      const Word& w = ctx.enumerator.word(x);
      const bool even = parity(x) == Parity::Even;
      suite.expect(is_palindrome(w) == even, [&] { return s(x) + " palindrome flag vs parity"; });
      const auto rotations = count_palindromic_rotations(w);
      suite.expect(rotations == (even ? 1u : 0u),
                   [&] { return s(x) + " has " + std::to_string(rotations) + " palindromic rotations"; });
      if (!even) {
        const auto pp = parent_product(x);
        suite.expect(is_palindrome(ctx.enumerator.word(pp.left, scheme_for(x))) &&
                         is_palindrome(ctx.enumerator.word(pp.right, scheme_for(x))),
                     [&] { return s(x) + " odd factors are not palindromes"; });
      }
      ctx.enumerator.certificate(x);
    });
  }
}

void reflection_symmetry(Context& ctx, Suite& suite) {
  const Word a_inv = Word::letter(Letter::A);
  const Word b = Word::letter(Letter::b);
  for (Rational x : ctx.corpus) {
    if (x.num() < 0) continue;
    suite.expect(ctx.enumerator.word(negate(x)) == substitute(ctx.enumerator.word(x), a_inv, b),
                 [&] { return s(x) + " mirror word mismatch"; });
  }
}

void classify_forms(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    suite.guarded(s(x), [&] {
      const auto form = classify_form(ctx.enumerator.word(x));
      suite.expect(form.quadrant == quadrant_of(x), [&] {
        return s(x) + " classified as " + to_string(form.quadrant);
      });
      suite.expect(form.max_adjacent_gap <= 1, [&] { return s(x) + " gap"; });
    });
  }
}

void conjugacy_bridges(Context& ctx, Suite& suite) {
  for (Rational x : ctx.corpus) {
    suite.guarded(s(x), [&] {
      suite.expect(conjugacy_bridge(x).holds(), [&] { return s(x) + " not conjugate to its F-word"; });
    });
  }
}

void winding_round_trip(Context& ctx, Suite& suite) {
  for (const CFSeq& seq : positive_sequences(ctx.max_level)) {
    suite.guarded(to_string(seq), [&] {
      const auto forward = apply_sequence(GenPair::standard(), seq);
      const auto back = apply_sequence(forward.back(), reverse_negate(seq));
      suite.expect(back.back() == GenPair::standard(), [&] { return to_string(seq) + " did not return to (a, b)"; });
    });
  }
}

void fword_recurrence(Context& ctx, Suite& suite) {
  for (const CFSeq& seq : positive_sequences(ctx.max_level)) {
    const auto pairs = fword_pairs(GenPair::standard(), seq);
    std::vector<Word> b_seq{Word::letter(Letter::A), Word::letter(Letter::b)};  // B_{-2}, B_{-1}
    for (std::size_t t = 0; t < seq.size(); ++t) {
      const Word next = concat(b_seq[t], power(b_seq[t + 1], seq[t]));
      b_seq.push_back(next);
      suite.expect(pairs[t].second == next && pairs[t].first == invert(b_seq[t + 1]),
                   [&] { return to_string(seq) + " recurrence breaks at step " + std::to_string(t); });
    }
  }
}

void neighbor_pairs(Context& ctx, Suite& suite) {
  const auto report = verify_neighbor_pairs(ctx.max_level, SignFilter::Both, ctx.threads);
  for (std::size_t i = 0; i < report.pairs_checked; ++i) {
    suite.expect(i >= report.failures.size(), [&] {
      const auto& f = report.failures[i];
      return "(" + s(f.left) + ", " + s(f.right) + ") " + f.reason;
    });
  }
}

void oracle_agreement(Context& ctx, Suite& suite) {
  std::mt19937_64 rng(kSeed + 1);
  std::vector<Rational> pos;
  std::vector<Rational> neg;
  for (Rational x : ctx.corpus) (x.num() > 0 ? pos : neg).push_back(x);

  std::vector<GenPair> controls;
  // Non-neighbour enumeration pairs: never bases, since |det| = |ps - qr| != 1.
  while (controls.size() < 500) {
    auto& side = controls.size() % 2 ? neg : pos;
    std::uniform_int_distribution<std::size_t> pick(0, side.size() - 1);
    const Rational x = side[pick(rng)];
    const Rational y = side[pick(rng)];
    if (x == y || is_neighbor(x, y)) continue;
    controls.push_back({ctx.enumerator.word(x), ctx.enumerator.word(y)});
  }
  // Random bases from Nielsen moves on (a, b), and perturbed copies.
  std::uniform_int_distribution<int> move(0, 5);
  std::uniform_int_distribution<int> steps(1, 12);
  while (controls.size() < 1000) {
    GenPair p = GenPair::standard();
    for (int k = steps(rng); k > 0; --k) {
      switch (move(rng)) {
        case 0: p.first = concat(p.first, p.second); break;
        case 1: p.first = concat(invert(p.second), p.first); break;
        case 2: p.second = concat(p.second, invert(p.first)); break;
        case 3: p.second = concat(p.first, p.second); break;
        case 4: std::swap(p.first, p.second); break;
        default: p.first = invert(p.first); break;
      }
    }
    if (controls.size() % 4 == 3) p.second = concat(p.second, p.second);
    controls.push_back(p);
  }

  for (const GenPair& p : controls) {
    const auto folding = stallings_basis_check(p);
    const auto nielsen = nielsen_reduce(p);
    const auto describe = [&] { return "(" + format_caret(p.first) + ", " + format_caret(p.second) + ")"; };
    suite.expect(folding.verdict == nielsen.verdict, [&] { return describe() + " oracles disagree"; });
    const auto det = abelianization(p).determinant();
    suite.expect(folding.verdict != Verdict::Basis || det == 1 || det == -1,
                 [&] { return describe() + " basis with determinant " + std::to_string(det); });
  }
}

using SuiteFn = void (*)(Context&, Suite&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"classify-form", classify_forms},
      {"conjugacy-bridge", conjugacy_bridges},
      {"cyclic-reduction", cyclic_reduction},
      {"exponent-sums", exponent_sum_law},
      {"farey-arithmetic", farey_arithmetic},
      {"fword-recurrence", fword_recurrence},
      {"length-law", length_law},
      {"neighbor-pairs", neighbor_pairs},
      {"no-cancellation", no_cancellation},
      {"oracle-agreement", oracle_agreement},
      {"palindrome-parity", palindrome_parity},
      {"reflection-symmetry", reflection_symmetry},
      {"winding-round-trip", winding_round_trip},
      {"word-laws", word_laws},
  };
  return suites;
}

Context make_context(std::int64_t max_level, unsigned threads) {
  if (max_level < 1) throw std::invalid_argument("max level must be at least 1");
  return {max_level, threads, rationals_by_level(max_level, SignFilter::Both), {}};
}

SuiteResult run_one(Context& ctx, const std::string& name, SuiteFn fn) {
  Suite suite(name);
  suite.guarded(name, [&] { fn(ctx, suite); });
  return suite.take();
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.failed == 0; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_level"] = max_level;
  j["passed"] = passed();
  j["suites"] = nlohmann::ordered_json::array();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& r : suites) {
    j["suites"].push_back({{"name", r.name},
                           {"checked", r.checked},
                           {"failed", r.failed},
                           {"failures", r.failures}});
    for (const auto& f : r.failures) failures.push_back(r.name + ": " + f);
    if (r.failed > r.failures.size()) {
      failures.push_back(r.name + ": " + std::to_string(r.failed - r.failures.size()) + " more");
    }
  }
  j["failures"] = std::move(failures);
  return j.dump(2);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::int64_t max_level, unsigned threads) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite " + name);
  Context ctx = make_context(max_level, threads);
  return run_one(ctx, name, it->second);
}

VerifyReport run_verification(std::int64_t max_level, unsigned threads) {
  Context ctx = make_context(max_level, threads);
  VerifyReport report;
  report.max_level = max_level;
  for (const auto& [name, fn] : registry()) report.suites.push_back(run_one(ctx, name, fn));
  return report;
}

}  // namespace fareyprim
