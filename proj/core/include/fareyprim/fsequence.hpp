#ifndef FAREYPRIM_FSEQUENCE_HPP_
#define FAREYPRIM_FSEQUENCE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/rational.hpp"
#include "fareyprim/word.hpp"

namespace fareyprim {

/// Ordered pair of words.
struct GenPair {
  Word first;
  Word second;

  static GenPair standard() { return {Word::letter(Letter::a), Word::letter(Letter::b)}; }

  friend bool operator==(const GenPair&, const GenPair&) = default;
};

/// Unwinding step labelled t: (M, N) -> (N^-1, M^-1 N^t). Any integer t.
GenPair unwind_step(const GenPair& pair, std::int64_t t);

/// Winding step labelled -q: (U, V) -> (U^-q V^-1, U^-1). Exact inverse of
/// unwind_step(., q). Requires q >= 0; q = 0 only arises from the image of a
/// leading zero under reverse_negate.
GenPair wind_step(const GenPair& pair, std::int64_t q);

/// Applies one step per entry: unwind for a nonnegative sequence, wind for a
/// nonpositive one. Returns the pair reached after each step.
///
/// A zero is allowed as the first entry, and as the last entry of a winding
/// sequence. Mixed signs throw InvalidSequence.
std::vector<GenPair> apply_sequence(const GenPair& start, const CFSeq& seq);

/// F-word pairs: (X, Y) -> (Y^-1, X^-1 Y^{a_t}) for every entry, whatever
/// its sign. Agrees with apply_sequence on nonnegative sequences; for
/// negative sequences this is the rule whose last word is conjugate to the
/// enumeration word.
std::vector<GenPair> fword_pairs(const GenPair& start, const CFSeq& seq);

/// Last word W_{[a0,...,ak]}(a, b) of fword_pairs from (a, b).
Word fword(const CFSeq& seq);

/// [b0, ..., bk] = [-ak, ..., -a0]
CFSeq reverse_negate(const CFSeq& seq);

/// Position of a rational relative to -1, 0, 1 and infinity.
enum class Quadrant { GT1, ZeroToOne, LTminus1, MinusOneToZero };

class NoFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape of a word that fits one of the four primitive-exponent templates:
/// one generator (the unit generator) occurs only with exponent +-1, always
/// with the same sign, separating blocks of the other generator, whose
/// exponents also share one sign.
struct FormReport {
  Quadrant quadrant = Quadrant::GT1;
  /// Sign of the block generator's exponents.
  int epsilon = 1;
  Generator unit = Generator::a;
  /// v_0 .. v_j: block lengths around the j unit letters. v_0 and v_j may be 0.
  std::vector<std::int64_t> exponents;
  /// Largest difference between cyclically adjacent blocks, where the ends
  /// v_j and v_0 merge into one block.
  std::int64_t max_adjacent_gap = 0;
};

/// Throws NoFormError when w fits no template, or when cyclically adjacent
/// primitive exponents differ by more than 1. Either way w is not primitive.
FormReport classify_form(const Word& w);

/// Throws InvalidRational for 0/1 and 1/0.
Quadrant quadrant_of(Rational x);

struct BridgeReport {
  bool direct = false;   ///< E(x) conjugate to the F-word
  bool inverse = false;  ///< E(x) conjugate to the inverse of the F-word

  bool holds() const noexcept { return direct || inverse; }
};

/// Compares enumerate_word(x) with fword(to_cf(x)) up to conjugacy and
/// inversion. Throws InvalidRational for 0/1 and 1/0.
BridgeReport conjugacy_bridge(Rational x);

std::string to_string(Quadrant q);

}  // namespace fareyprim

#endif  // FAREYPRIM_FSEQUENCE_HPP_
