#include "fareyprim/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "fareyprim/word_format.hpp"

namespace fareyprim {

Rational make_rational(std::int64_t p, std::int64_t q, Strictness mode) {
  if (p == 0 && q == 0) throw InvalidRational("0/0 is not a rational number");
  if (q == 0) {
    if (mode == Strictness::Strict && p != 1 && p != -1) {
      throw InvalidRational(std::to_string(p) + "/0 is not in lowest terms");
    }
    return Rational(1, 0);
  }
  if (p == INT64_MIN || q == INT64_MIN) throw ArithmeticOverflow("int64 overflow in make_rational");
  const std::int64_t g = std::gcd(p, q);
  if (mode == Strictness::Strict && g != 1) {
    throw InvalidRational(std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

Rational negate(Rational x) {
  if (x.is_infinite()) return x;
  return make_rational(-x.num(), x.den());
}

Rational abs(Rational x) { return x.num() < 0 ? negate(x) : x; }

int compare(Rational x, Rational y) {
  if (x.is_infinite() || y.is_infinite()) {
    return static_cast<int>(x.is_infinite()) - static_cast<int>(y.is_infinite());
  }
  const __int128 lhs = static_cast<__int128>(x.num()) * y.den();
  const __int128 rhs = static_cast<__int128>(y.num()) * x.den();
  return (lhs > rhs) - (lhs < rhs);
}

std::string to_string(Rational x) {
  return std::to_string(x.num()) + "/" + std::to_string(x.den());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ParseError("malformed fraction \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text, Strictness mode) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_int(text, text), 1, mode);
  return make_rational(parse_int(text.substr(0, slash), text),
                       parse_int(text.substr(slash + 1), text), mode);
}

}  // namespace fareyprim
