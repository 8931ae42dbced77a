#ifndef FAREYPRIM_RATIONAL_HPP_
#define FAREYPRIM_RATIONAL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fareyprim {

/// Raised for (0, 0), for non-coprime input in strict mode, and for
/// operations that are undefined on a particular value (e.g. the CF of 1/0).
class InvalidRational : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("int64 overflow in addition");
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
  return r;
}

}  // namespace checked

enum class Strictness { Normalize, Strict };

/// Exact fraction p/q in lowest terms with q >= 0. The point at infinity has
/// the single representative 1/0.
class Rational {
 public:
  /// 0/1
  constexpr Rational() = default;

  static constexpr Rational infinity() { return Rational(1, 0); }
  static constexpr Rational zero() { return Rational(0, 1); }
  static constexpr Rational integer(std::int64_t n) { return Rational(n, 1); }

  constexpr std::int64_t num() const noexcept { return p_; }
  constexpr std::int64_t den() const noexcept { return q_; }

  constexpr bool is_infinite() const noexcept { return q_ == 0; }
  constexpr bool is_zero() const noexcept { return p_ == 0; }
  /// -1, 0 or +1. Infinity reports 0: it has no sign of its own.
  constexpr int sign() const noexcept { return q_ == 0 ? 0 : (p_ > 0) - (p_ < 0); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  friend Rational make_rational(std::int64_t, std::int64_t, Strictness);
  constexpr Rational(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Canonical lowest-terms value. Any (m, 0) with m != 0 is 1/0.
/// Throws InvalidRational on (0, 0), and on non-coprime input when strict.
Rational make_rational(std::int64_t p, std::int64_t q, Strictness mode = Strictness::Normalize);

/// -x; infinity maps to itself.
Rational negate(Rational x);

Rational abs(Rational x);

/// Total order on finite values with 1/0 treated as +infinity.
/// Returns negative, zero or positive.
int compare(Rational x, Rational y);

/// "p/q"
std::string to_string(Rational x);

/// Accepts "p/q" or a bare integer "p". Throws ParseError on malformed text
/// and InvalidRational on 0/0 (or non-coprime input when strict).
Rational parse_rational(std::string_view text, Strictness mode = Strictness::Normalize);

}  // namespace fareyprim

template <>
struct std::hash<fareyprim::Rational> {
  std::size_t operator()(const fareyprim::Rational& x) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(x.num());
    const auto h2 = std::hash<std::int64_t>{}(x.den());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

#endif  // FAREYPRIM_RATIONAL_HPP_
