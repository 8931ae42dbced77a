#ifndef FAREYPRIM_WORD_HPP_
#define FAREYPRIM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace fareyprim {

enum class Generator : std::uint8_t { a, b };

/// One of the four letters a, a^-1, b, b^-1. Uppercase names denote inverses.
enum class Letter : std::int8_t { a = 1, A = -1, b = 2, B = -2 };

constexpr Generator generator(Letter l) noexcept {
  return (l == Letter::a || l == Letter::A) ? Generator::a : Generator::b;
}

constexpr int sign(Letter l) noexcept {
  return static_cast<std::int8_t>(l) > 0 ? 1 : -1;
}

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(-static_cast<std::int8_t>(l));
}

constexpr Letter make_letter(Generator g, int sgn) noexcept {
  if (g == Generator::a) return sgn > 0 ? Letter::a : Letter::A;
  return sgn > 0 ? Letter::b : Letter::B;
}

/// A freely reduced word in F(a, b). The empty word is the identity.
///
/// Every constructor reduces its input, so a Word value never contains an
/// adjacent pair x x^-1.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters);

  /// Free reduction by a single left-to-right stack pass.
  static Word normalize(std::span<const Letter> raw);

  /// Wraps a letter sequence already known to be reduced. Checked in debug builds.
  static Word from_reduced(std::vector<Letter> letters);

  static Word letter(Letter l) { return from_reduced({l}); }
  static Word identity() { return {}; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& x, const Word& y) = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word core;
  Word conjugator;
};

struct ExponentSums {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word reverse(const Word& w);
bool is_palindrome(const Word& w);

/// Splits w = conjugator * core * conjugator^-1 with core cyclically reduced
/// and the conjugator as short as possible.
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// True iff u and v are conjugate in F(a, b).
bool cyclic_equal(const Word& u, const Word& v);

/// Cyclic rotation starting at letter `shift` (taken mod size). The result is
/// reduced only when w is cyclically reduced.
Word rotate(const Word& w, std::size_t shift);

/// Number of distinct offsets k in [0, size) whose rotation is a palindrome.
/// The identity has one (empty) palindromic rotation.
std::size_t count_palindromic_rotations(const Word& w);

ExponentSums exponent_sums(const Word& w);

Word power(const Word& w, std::int64_t t);

/// Image of w under the endomorphism a -> x, b -> y.
Word substitute(const Word& w, const Word& x, const Word& y);

/// g * w * g^-1
Word conjugate(const Word& w, const Word& g);

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

}  // namespace fareyprim

#endif  // FAREYPRIM_WORD_HPP_
