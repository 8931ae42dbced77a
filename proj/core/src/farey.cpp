#include "fareyprim/farey.hpp"

namespace fareyprim {

std::int64_t farey_level(Rational x) {
  if (x.is_infinite() || x.is_zero()) return 0;
  std::int64_t level = 0;
  for (auto a : to_cf(x).entries) level = checked::add(level, a < 0 ? -a : a);
  return level;
}

bool is_neighbor(Rational x, Rational y) {
  const __int128 det = static_cast<__int128>(x.num()) * y.den() -
                       static_cast<__int128>(x.den()) * y.num();
  return det == 1 || det == -1;
}

Rational mediant(Rational x, Rational y) {
  if (!is_neighbor(x, y)) {
    throw FareyError(to_string(x) + " and " + to_string(y) + " are not Farey neighbours");
  }
  auto numerator = [](Rational v, Rational other) {
    return v.is_infinite() && other.num() < 0 ? -v.num() : v.num();
  };
  return make_rational(checked::add(numerator(x, y), numerator(y, x)),
                       checked::add(x.den(), y.den()));
}

Parents parents(Rational x) {
  if (x.is_infinite() || x.is_zero()) {
    throw FareyError(to_string(x) + " is a root of the Farey tree and has no parents");
  }
  const CFSeq c = to_cf(x);
  CFSeq truncated(std::vector<std::int64_t>(c.entries.begin(), c.entries.end() - 1));
  CFSeq decremented = c;
  decremented.entries.back() -= x.num() > 0 ? 1 : -1;
  const Rational u = from_cf(truncated);
  const Rational v = from_cf(decremented);

  const bool positive = x.num() > 0;
  // Signed comparison with infinity placed on x's side.
  auto less = [positive](Rational s, Rational t) {
    if (s.is_infinite()) return !positive;
    if (t.is_infinite()) return positive;
    return compare(s, t) < 0;
  };
  return less(u, v) ? Parents{u, v} : Parents{v, u};
}

Parity parity(Rational x) {
  return (x.num() % 2 == 0 || x.den() % 2 == 0) ? Parity::Even : Parity::Odd;
}

std::vector<Rational> rationals_by_level(std::int64_t max_level, SignFilter sign) {
  std::vector<Rational> out;
  if (max_level < 1) return out;

  // Stern-Brocot breadth-first: each node carries the interval it splits.
  struct Node {
    Rational value;
    Rational lo;
    Rational hi;
  };
  std::vector<Node> level{{Rational::integer(1), Rational::zero(), Rational::infinity()}};
  for (std::int64_t depth = 1; depth <= max_level; ++depth) {
    if (sign != SignFilter::Negative) {
      for (const auto& n : level) out.push_back(n.value);
    }
    if (sign != SignFilter::Positive) {
      for (const auto& n : level) out.push_back(negate(n.value));
    }
    if (depth == max_level) break;
    std::vector<Node> next;
    next.reserve(2 * level.size());
    for (const auto& n : level) {
      next.push_back({mediant(n.lo, n.value), n.lo, n.value});
      next.push_back({mediant(n.value, n.hi), n.value, n.hi});
    }
    level = std::move(next);
  }
  return out;
}

LeftRightSequence left_right_sequence(Rational x) {
  if (x.is_infinite() || x.is_zero()) {
    throw FareyError("left-right sequence is undefined for " + to_string(x));
  }
  LeftRightSequence s;
  s.orientation = x.num() > 0 ? 1 : -1;
  for (auto a : to_cf(x).entries) s.steps.push_back(a < 0 ? -a : a);
  return s;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(const LeftRightSequence& s) {
  std::string out = s.orientation > 0 ? "+(" : "-(";
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += std::to_string(s.steps[i]);
  }
  return out + ")";
}

}  // namespace fareyprim
