#ifndef FAREYPRIM_ENUMERATION_HPP_
#define FAREYPRIM_ENUMERATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fareyprim/farey.hpp"
#include "fareyprim/rational.hpp"
#include "fareyprim/word.hpp"

namespace fareyprim {

/// Which enumeration scheme assigns the word. Positive rationals always use
/// the positive scheme and negative rationals the negative one; the flag only
/// matters for 0/1 and 1/0, whose base words differ (a^-1 versus a).
enum class Scheme { Positive, Negative };

Scheme scheme_for(Rational x, Scheme roots = Scheme::Positive);

enum class FactorCase { Base, EvenProduct, OddProduct };

/// How E(target) splits into parent words, in concatenation order.
struct Factorization {
  Rational target;
  Scheme scheme = Scheme::Positive;
  FactorCase kind = FactorCase::Base;
  std::optional<Rational> left;
  std::optional<Rational> right;
};

/// Parent words in the order the parity rule concatenates them. Also defined
/// for the level-1 base rationals +-1/1, whose words agree with the rule.
struct ParentProduct {
  Rational left;
  Rational right;
};

class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PalindromeCertificate {
  Rational target;
  Scheme scheme = Scheme::Positive;
  Parity parity = Parity::Even;
  bool palindrome = false;
  std::size_t palindromic_rotations = 0;
  /// Odd case only.
  std::optional<ParentProduct> factors;
};

/// Memoized evaluator of the palindromic enumeration scheme.
///
/// Base words: positive scheme E(0/1) = a^-1, E(1/0) = b, E(1/1) = b a^-1;
/// negative scheme E(0/1) = a, E(1/0) = b, E(-1/1) = b a. Otherwise, with m
/// the parent on the side of 0 (smaller for x > 0, larger for x < 0) and r the
/// other one, an odd x gives E(r) E(m) and an even x gives E(m) E(r).
///
/// Not thread-safe; use one instance per worker.
class Enumerator {
 public:
  /// Word for x; `roots` selects the scheme for 0/1 and 1/0.
  const Word& word(Rational x, Scheme roots = Scheme::Positive);

  Factorization factorization(Rational x, Scheme roots = Scheme::Positive);

  /// Throws CertificateFailure naming the first clause that does not hold.
  PalindromeCertificate certificate(Rational x, Scheme roots = Scheme::Positive);

  std::size_t cache_size() const noexcept { return cache_[0].size() + cache_[1].size(); }

 private:
  std::unordered_map<Rational, Word>& cache(Scheme s) { return cache_[static_cast<int>(s)]; }

  std::unordered_map<Rational, Word> cache_[2];
};

bool is_base(Rational x, Scheme scheme);

/// Parity-rule product order for any x other than 0/1 and 1/0.
ParentProduct parent_product(Rational x);

Word enumerate_word(Rational x, Scheme roots = Scheme::Positive);
Factorization factorization(Rational x, Scheme roots = Scheme::Positive);
PalindromeCertificate palindrome_certificate(Rational x, Scheme roots = Scheme::Positive);

std::string to_string(FactorCase c);
std::string to_string(Scheme s);

}  // namespace fareyprim

#endif  // FAREYPRIM_ENUMERATION_HPP_
