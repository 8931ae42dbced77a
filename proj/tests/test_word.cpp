#include <gtest/gtest.h>

#include "fareyprim/enumeration.hpp"
#include "fareyprim/word.hpp"
#include "fareyprim/word_format.hpp"
#include "oracles.hpp"

using namespace fareyprim;

namespace {

Word w(const char* text) { return parse_word(text); }

}  // namespace

TEST(Word, NormalizeCancelsAdjacentInverses) {
  const std::vector<Letter> raw = {Letter::a, Letter::b, Letter::B, Letter::A, Letter::b};
  EXPECT_EQ(Word::normalize(raw), Word::letter(Letter::b));
  EXPECT_TRUE(Word({Letter::a, Letter::A}).empty());
}

TEST(Word, NormalizeMatchesNaiveReduction) {
  oracle::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto raw = rng.raw(30);
    EXPECT_EQ(oracle::letters(Word::normalize(raw)), oracle::reduce(raw));
  }
}

TEST(Word, ConcatCancelsAtJunction) {
  EXPECT_EQ(concat(w("abA"), w("aB")), w("a"));
  EXPECT_EQ(concat(w("ab"), invert(w("ab"))), Word::identity());
}

TEST(Word, GroupLawsOnRandomWords) {
  oracle::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Word u = Word::normalize(rng.raw(20));
    const Word v = Word::normalize(rng.raw(20));
    const Word x = Word::normalize(rng.raw(20));
    EXPECT_EQ(concat(concat(u, v), x), concat(u, concat(v, x)));
    EXPECT_EQ(invert(concat(u, v)), concat(invert(v), invert(u)));
    EXPECT_EQ(invert(invert(u)), u);
    EXPECT_EQ(oracle::letters(concat(u, v)), oracle::cat(oracle::letters(u), oracle::letters(v)));
  }
}

TEST(Word, PalindromeAndReverse) {
  EXPECT_TRUE(is_palindrome(w("AAbAAAbAA")));
  EXPECT_FALSE(is_palindrome(w("AbAA")));
  EXPECT_TRUE(is_palindrome(Word::identity()));
  EXPECT_EQ(reverse(w("abB")), w("a"));
  EXPECT_EQ(reverse(w("aab")), w("baa"));
}

TEST(Word, CyclicReduceSplitsConjugator) {
  const Word x = w("ab a^2 B A");
  const auto r = cyclic_reduce(x);
  EXPECT_EQ(r.core, w("a^2"));
  EXPECT_EQ(r.conjugator, w("ab"));
  EXPECT_EQ(conjugate(r.core, r.conjugator), x);
  EXPECT_TRUE(is_cyclically_reduced(r.core));
  EXPECT_FALSE(is_cyclically_reduced(x));
}

TEST(Word, ConjugatedEnumerationWordReducesToRotation) {
  // b^-1 E(31/9) b already cancels to a cyclically reduced rotation of E.
  const Word e = enumerate_word(make_rational(31, 9));
  const Word x = concat(concat(w("B"), e), w("b"));
  const auto r = cyclic_reduce(x);
  EXPECT_EQ(r.core.size(), 40u);
  EXPECT_TRUE(r.conjugator.empty());
  EXPECT_TRUE(cyclic_equal(r.core, e));
}

TEST(Word, CyclicEqualAgreesWithRotationOracle) {
  oracle::Rng rng(13);
  for (int i = 0; i < 1500; ++i) {
    const Word u = Word::normalize(rng.raw(10));
    const Word g = Word::normalize(rng.raw(6));
    // Half the cases are conjugates, half are unrelated words.
    const Word v = i % 2 ? conjugate(u, g) : Word::normalize(rng.raw(10));
    EXPECT_EQ(cyclic_equal(u, v), oracle::conjugate(oracle::letters(u), oracle::letters(v)))
        << format_caret(u) << " vs " << format_caret(v);
  }
}

TEST(Word, RotateIsCyclic) {
  const Word x = w("aabAb");
  EXPECT_EQ(rotate(x, 0), x);
  EXPECT_EQ(rotate(x, 2), w("bAbaa"));
  EXPECT_EQ(rotate(x, 5), x);
}

TEST(Word, PalindromicRotationsMatchOracle) {
  oracle::Rng rng(14);
  for (int i = 0; i < 1500; ++i) {
    const Word c = cyclic_reduce(Word::normalize(rng.raw(12))).core;
    EXPECT_EQ(count_palindromic_rotations(c), oracle::palindromic_rotations(oracle::letters(c)))
        << format_caret(c);
  }
  EXPECT_EQ(count_palindromic_rotations(w("AbAA")), 0u);
  EXPECT_EQ(count_palindromic_rotations(w("AbA")), 1u);
  EXPECT_EQ(count_palindromic_rotations(w("aaa")), 3u);
}

TEST(Word, ExponentSums) {
  const auto s = exponent_sums(w("A^-2 b A^-3 b A^-2"));
  EXPECT_EQ(s.a, -7);
  EXPECT_EQ(s.b, 2);
}

TEST(Word, PowerAndSubstitute) {
  EXPECT_EQ(power(w("ab"), 3), w("ababab"));
  EXPECT_EQ(power(w("ab"), -2), w("BABA"));
  EXPECT_EQ(power(w("ab"), 0), Word::identity());
  EXPECT_EQ(power(w("a b A"), 2), w("a b^2 A"));
  EXPECT_EQ(substitute(w("bA"), w("A"), w("b")), w("ba"));
  EXPECT_EQ(substitute(w("ab"), w("ab"), w("B")), w("a"));
}
