#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <numeric>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/rational.hpp"
#include "oracles.hpp"

using namespace fareyprim;

TEST(Rational, MakeNormalizes) {
  const Rational x = make_rational(31, 9);
  EXPECT_EQ(x.num(), 31);
  EXPECT_EQ(x.den(), 9);
  EXPECT_EQ(make_rational(0, 5), Rational::zero());
  EXPECT_EQ(make_rational(-3, 0), Rational::infinity());
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_THROW(make_rational(0, 0), InvalidRational);
}

TEST(Rational, StrictRejectsNonCoprime) {
  EXPECT_THROW(make_rational(6, 4, Strictness::Strict), InvalidRational);
  EXPECT_NO_THROW(make_rational(3, 2, Strictness::Strict));
  EXPECT_THROW(parse_rational("4/2", Strictness::Strict), InvalidRational);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("31/9"), make_rational(31, 9));
  EXPECT_EQ(parse_rational("-2/5"), make_rational(-2, 5));
  EXPECT_EQ(parse_rational("7"), Rational::integer(7));
  EXPECT_EQ(parse_rational("1/0"), Rational::infinity());
  EXPECT_EQ(to_string(make_rational(-2, 5)), "-2/5");
  EXPECT_EQ(to_string(Rational::infinity()), "1/0");
  EXPECT_THROW(parse_rational("3/x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("0/0"), InvalidRational);
}

TEST(Rational, CompareTreatsInfinityAsLargest) {
  EXPECT_LT(compare(make_rational(24, 7), make_rational(7, 2)), 0);
  EXPECT_GT(compare(Rational::infinity(), Rational::integer(1000)), 0);
  EXPECT_EQ(compare(make_rational(1, 2), make_rational(2, 4)), 0);
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_LT(compare(make_rational(big - 1, big), make_rational(1, 1)), 0);
}

TEST(ContinuedFraction, ExpandsKnownExamples) {
  EXPECT_EQ(to_cf(make_rational(31, 9)), (CFSeq{3, 2, 4}));
  EXPECT_EQ(to_cf(make_rational(24, 7)), (CFSeq{3, 2, 3}));
  EXPECT_EQ(to_cf(make_rational(-31, 9)), (CFSeq{-3, -2, -4}));
  EXPECT_EQ(to_cf(Rational::zero()), (CFSeq{0}));
  EXPECT_THROW(to_cf(Rational::infinity()), InvalidRational);
}

TEST(ContinuedFraction, Evaluates) {
  EXPECT_EQ(from_cf(CFSeq{3, 2}), make_rational(7, 2));
  EXPECT_EQ(from_cf(CFSeq{0, 3, 1}), make_rational(1, 4));
  EXPECT_EQ(from_cf(CFSeq{0}), Rational::zero());
  EXPECT_EQ(from_cf(CFSeq{}), Rational::infinity());
  EXPECT_EQ(canonicalize(CFSeq{0, 3, 1}), (CFSeq{0, 4}));
}

TEST(ContinuedFraction, Approximants) {
  const auto a = approximants(CFSeq{3, 2, 4});
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], Rational::integer(3));
  EXPECT_EQ(a[1], make_rational(7, 2));
  EXPECT_EQ(a[2], make_rational(31, 9));
  const auto b = approximants(CFSeq{0, 2, 2});
  EXPECT_EQ(b.back(), make_rational(2, 5));
  EXPECT_EQ(b[1], make_rational(1, 2));
  EXPECT_EQ(approximants(CFSeq{5}).front(), Rational::integer(5));
}

TEST(ContinuedFraction, ValidationRejectsBadSequences) {
  EXPECT_THROW(validate_cf(CFSeq{3, -2}), InvalidSequence);
  EXPECT_THROW(validate_cf(CFSeq{3, 0, 2}), InvalidSequence);
  EXPECT_NO_THROW(validate_cf(CFSeq{0, 2}));
  EXPECT_NO_THROW(validate_cf(CFSeq{-1, -5}));
}

TEST(ContinuedFraction, ParseAndPrint) {
  EXPECT_EQ(parse_cf("[3;2,4]"), (CFSeq{3, 2, 4}));
  EXPECT_EQ(parse_cf("3,2,4"), (CFSeq{3, 2, 4}));
  EXPECT_EQ(parse_cf("-4,-2,-3"), (CFSeq{-4, -2, -3}));
  EXPECT_EQ(parse_cf("0"), (CFSeq{0}));
  EXPECT_EQ(to_string(CFSeq{3, 2, 4}), "[3;2,4]");
  EXPECT_THROW(parse_cf("3,x"), std::invalid_argument);
}

TEST(ContinuedFraction, RoundTripMatchesEuclidOracle) {
  oracle::Rng rng(31);
  for (int i = 0; i < 3000; ++i) {
    std::int64_t p = rng.uniform(-5000, 5000);
    std::int64_t q = rng.uniform(1, 5000);
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    const Rational x = make_rational(p, q);
    const CFSeq cf = to_cf(x);
    EXPECT_EQ(from_cf(cf), x);
    std::int64_t sum = 0;
    for (auto e : cf.entries) sum += e < 0 ? -e : e;
    EXPECT_EQ(sum, oracle::level(p, q)) << p << "/" << q;
  }
}

TEST(ContinuedFraction, OverflowIsReported) {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  EXPECT_THROW(from_cf(CFSeq{big, 1, big}), ArithmeticOverflow);
}
