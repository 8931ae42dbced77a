#ifndef FAREYPRIM_CONTINUED_FRACTION_HPP_
#define FAREYPRIM_CONTINUED_FRACTION_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fareyprim/rational.hpp"

namespace fareyprim {

class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signed continued fraction [a0; a1, ..., ak], which doubles as an
/// F-sequence. Negative rationals use the entrywise negation of the
/// expansion of |x|, so every entry shares one sign. The empty sequence
/// stands for 1/0.
struct CFSeq {
  std::vector<std::int64_t> entries;

  CFSeq() = default;
  CFSeq(std::initializer_list<std::int64_t> e) : entries(e) {}
  explicit CFSeq(std::vector<std::int64_t> e) : entries(std::move(e)) {}

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  std::int64_t operator[](std::size_t i) const { return entries[i]; }

  /// +1 if some entry is positive, -1 if some entry is negative, 0 if all
  /// entries are zero (or the sequence is empty).
  int sign() const noexcept;

  friend bool operator==(const CFSeq&, const CFSeq&) = default;
};

/// Throws InvalidSequence on mixed signs or a zero entry after position 0.
void validate_cf(const CFSeq& c);

/// Merges a trailing +-1 into its predecessor when k >= 1.
CFSeq canonicalize(CFSeq c);

/// Canonical expansion (last entry of absolute value >= 2 when k >= 1).
/// Throws InvalidRational for 1/0.
CFSeq to_cf(Rational x);

/// Exact value by the approximant recursion. Accepts non-canonical trailing 1s.
Rational from_cf(const CFSeq& c);

/// p_n/q_n for n = 0..k.
std::vector<Rational> approximants(const CFSeq& c);

/// "[3;2,4]", "[-3;-2,-4]", "[5]", "[]".
std::string to_string(const CFSeq& c);

/// Accepts "[3;2,4]", "[3,2,4]", "3,2,4" and "3 2 4". Validates the result.
CFSeq parse_cf(std::string_view text);

}  // namespace fareyprim

#endif  // FAREYPRIM_CONTINUED_FRACTION_HPP_
