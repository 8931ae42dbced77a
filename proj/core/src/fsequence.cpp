#include "fareyprim/fsequence.hpp"

#include <algorithm>

#include "fareyprim/enumeration.hpp"

namespace fareyprim {

GenPair unwind_step(const GenPair& pair, std::int64_t t) {
  return {invert(pair.second), concat(invert(pair.first), power(pair.second, t))};
}

GenPair wind_step(const GenPair& pair, std::int64_t q) {
  if (q < 0) throw InvalidSequence("winding step needs q >= 0, got " + std::to_string(q));
  const Word u_inv = invert(pair.first);
  return {concat(power(u_inv, q), invert(pair.second)), u_inv};
}

std::vector<GenPair> apply_sequence(const GenPair& start, const CFSeq& seq) {
  const int s = seq.sign();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] > 0 && s < 0) throw InvalidSequence("mixed signs in " + to_string(seq));
    if (seq[i] < 0 && s > 0) throw InvalidSequence("mixed signs in " + to_string(seq));
    const bool zero_ok = i == 0 || (s < 0 && i + 1 == seq.size());
    if (seq[i] == 0 && !zero_ok) {
      throw InvalidSequence("zero entry at position " + std::to_string(i) + " in " + to_string(seq));
    }
  }
  std::vector<GenPair> out;
  out.reserve(seq.size());
  GenPair current = start;
  for (auto e : seq.entries) {
    current = s < 0 ? wind_step(current, -e) : unwind_step(current, e);
    out.push_back(current);
  }
  return out;
}

std::vector<GenPair> fword_pairs(const GenPair& start, const CFSeq& seq) {
  validate_cf(seq);
  std::vector<GenPair> out;
  out.reserve(seq.size());
  GenPair current = start;
  for (auto e : seq.entries) {
    current = unwind_step(current, e);
    out.push_back(current);
  }
  return out;
}

Word fword(const CFSeq& seq) {
  if (seq.empty()) return Word::letter(Letter::b);
  return fword_pairs(GenPair::standard(), seq).back().second;
}

CFSeq reverse_negate(const CFSeq& seq) {
  CFSeq out;
  out.entries.reserve(seq.size());
  for (auto it = seq.entries.rbegin(); it != seq.entries.rend(); ++it) out.entries.push_back(-*it);
  return out;
}

namespace {

struct Run {
  Generator gen;
  std::int64_t length;  // signed
};

std::vector<Run> runs_of(const Word& w) {
  std::vector<Run> runs;
  for (Letter l : w) {
    if (!runs.empty() && runs.back().gen == generator(l) &&
        (runs.back().length > 0) == (sign(l) > 0)) {
      runs.back().length += sign(l);
    } else {
      runs.push_back({generator(l), sign(l)});
    }
  }
  return runs;
}

}  // namespace

FormReport classify_form(const Word& w) {
  if (w.empty()) throw NoFormError("the identity fits no template");
  const auto runs = runs_of(w);

  int sign_of[2] = {0, 0};
  bool all_unit[2] = {true, true};
  std::size_t run_count[2] = {0, 0};
  for (const Run& r : runs) {
    const int g = static_cast<int>(r.gen);
    const int s = r.length > 0 ? 1 : -1;
    if (sign_of[g] != 0 && sign_of[g] != s) {
      throw NoFormError("exponents of one generator have mixed signs");
    }
    sign_of[g] = s;
    all_unit[g] = all_unit[g] && (r.length == 1 || r.length == -1);
    ++run_count[g];
  }

  FormReport report;
  if (run_count[0] == 0 || run_count[1] == 0) {
    // Degenerate single-generator word: only a lone letter is primitive.
    if (w.size() != 1) throw NoFormError("proper power of a single generator");
    const Generator g = generator(w[0]);
    report.unit = g == Generator::a ? Generator::b : Generator::a;
    report.epsilon = sign(w[0]);
    report.exponents = {1};
    report.quadrant = g == Generator::b ? Quadrant::GT1 : Quadrant::ZeroToOne;
    return report;
  }

  const int ia = static_cast<int>(Generator::a);
  const int ib = static_cast<int>(Generator::b);
  if (!all_unit[ia] && !all_unit[ib]) throw NoFormError("neither generator has unit exponents");
  if (all_unit[ia] && all_unit[ib]) {
    // Alternating word: the unit generator is the rarer one, b on a tie.
    report.unit = run_count[ia] < run_count[ib] ? Generator::a : Generator::b;
  } else {
    report.unit = all_unit[ia] ? Generator::a : Generator::b;
  }
  const int unit_sign = sign_of[static_cast<int>(report.unit)];
  report.epsilon = sign_of[report.unit == Generator::a ? ib : ia];

  report.exponents.push_back(0);
  for (const Run& r : runs) {
    if (r.gen == report.unit) {
      report.exponents.push_back(0);
    } else {
      report.exponents.back() += r.length > 0 ? r.length : -r.length;
    }
  }

  const bool opposite = unit_sign != report.epsilon;
  if (report.unit == Generator::a) {
    report.quadrant = opposite ? Quadrant::GT1 : Quadrant::LTminus1;
  } else {
    report.quadrant = opposite ? Quadrant::ZeroToOne : Quadrant::MinusOneToZero;
  }

  // Cyclic blocks: v_1 .. v_{j-1} and the merged end block v_j + v_0.
  const auto& v = report.exponents;
  std::vector<std::int64_t> cyclic(v.begin() + 1, v.end() - 1);
  cyclic.push_back(v.back() + v.front());
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const auto next = cyclic[(i + 1) % cyclic.size()];
    const auto gap = cyclic[i] > next ? cyclic[i] - next : next - cyclic[i];
    report.max_adjacent_gap = std::max(report.max_adjacent_gap, gap);
  }
  if (report.max_adjacent_gap > 1) {
    throw NoFormError("adjacent primitive exponents differ by " +
                      std::to_string(report.max_adjacent_gap));
  }
  return report;
}

Quadrant quadrant_of(Rational x) {
  if (x.is_infinite() || x.is_zero()) {
    throw InvalidRational(to_string(x) + " lies on a quadrant boundary");
  }
  const int vs_one = compare(abs(x), Rational::integer(1));
  if (x.num() > 0) return vs_one > 0 ? Quadrant::GT1 : Quadrant::ZeroToOne;
  return vs_one > 0 ? Quadrant::LTminus1 : Quadrant::MinusOneToZero;
}

BridgeReport conjugacy_bridge(Rational x) {
  if (x.is_infinite() || x.is_zero()) {
    throw InvalidRational("conjugacy bridge is undefined for " + to_string(x));
  }
  const Word e = enumerate_word(x);
  const Word f = fword(to_cf(x));
  return {cyclic_equal(e, f), cyclic_equal(e, invert(f))};
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::GT1: return "p/q>1";
    case Quadrant::ZeroToOne: return "0<p/q<=1";
    case Quadrant::LTminus1: return "p/q<-1";
    case Quadrant::MinusOneToZero: return "-1<=p/q<0";
  }
  return "?";
}

}  // namespace fareyprim
