#include <gtest/gtest.h>

#include <numeric>

#include "cuspval/errors.hpp"
#include "cuspval/exactnum.hpp"
#include "generators.hpp"

namespace cuspval {
namespace {

using testing::Gen;

CFExpansion cf(std::initializer_list<int> ds) {
  std::vector<Integer> v;
  for (int d : ds) v.emplace_back(d);
  return CFExpansion(std::move(v));
}

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

// Nested-fraction evaluation from the last digit outward.
Rational nested_value(const std::vector<Integer>& ds) {
  Rational acc = ds.back();
  for (std::size_t i = ds.size() - 1; i-- > 0;) acc = Rational(ds[i]) + Rational(1) / acc;
  return acc;
}

// Quotients of the division algorithm on (a, b).
std::vector<Integer> euclid_quotients(std::int64_t a, std::int64_t b) {
  std::vector<Integer> out;
  while (b != 0) {
    out.emplace_back(a / b);
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return out;
}

// Sign of sqrt(2) - t from exact squaring.
std::strong_ordering sqrt2_vs(const Rational& t) {
  if (t.sign() <= 0) return std::strong_ordering::greater;
  return (t * t < Rational(2)) ? std::strong_ordering::greater : std::strong_ordering::less;
}

TEST(Rational, NormalizesSignAndLowestTerms) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)), Rational(0));
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).denominator(), 1);
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), InvalidArgument);
  EXPECT_THROW(q(1) / q(0), InvalidArgument);
}

TEST(Rational, ArithmeticAndOrder) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_LT(q(-1, 2), q(1, 3));
  EXPECT_GT(q(7, 5), q(4, 3));
}

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
  EXPECT_EQ(q(7, 2).floor(), 3);
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(-6, 2).floor(), -3);
  EXPECT_EQ(floor_div(Integer(-1), Integer(3)), -1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("24/7"), q(24, 7));
  EXPECT_EQ(Rational::parse("-3"), q(-3));
  EXPECT_EQ(Rational::parse("10/-4"), q(-5, 2));
  EXPECT_EQ(q(24, 7).to_string(), "24/7");
  EXPECT_EQ(q(-6, 3).to_string(), "-2");
  EXPECT_THROW(Rational::parse(""), InvalidArgument);
  EXPECT_THROW(Rational::parse("1/0"), InvalidArgument);
  EXPECT_THROW(Rational::parse("x"), InvalidArgument);
  EXPECT_THROW(Rational::parse("1//2"), InvalidArgument);
}

TEST(Rational, HandlesValuesBeyondSixtyFourBits) {
  const Integer big = Integer(1) << 200;
  const Rational r(big + 1, big);
  EXPECT_EQ((r - Rational(1)) * Rational(big), Rational(1));
  EXPECT_EQ(Rational::parse(r.to_string()), r);
}

TEST(CFExpansion, RejectsInvalidDigits) {
  EXPECT_THROW(CFExpansion(std::vector<Integer>{}), InvalidArgument);
  EXPECT_THROW(cf({1, 0}), InvalidArgument);
  EXPECT_THROW(cf({1, 2, -1}), InvalidArgument);
  EXPECT_NO_THROW(cf({-3, 1, 1}));
}

TEST(CFExpansion, AlternateAndPrinting) {
  EXPECT_EQ(cf({3, 2, 3}).alternate(), cf({3, 2, 2, 1}));
  EXPECT_EQ(cf({3, 2, 2, 1}).alternate(), cf({3, 2, 3}));
  EXPECT_EQ(cf({7}).alternate(), cf({6, 1}));
  EXPECT_EQ(cf({3, 2, 3}).to_string(), "[3; 2, 3]");
  EXPECT_EQ(cf({7}).to_string(), "[7]");
  EXPECT_TRUE(cf({1, 2}).is_canonical());
  EXPECT_FALSE(cf({1, 1, 1}).is_canonical());
  EXPECT_TRUE(cf({1}).is_canonical());
}

TEST(CfExpand, ReferenceExamples) {
  EXPECT_EQ(cf_expand(q(3, 2)), cf({1, 2}));
  EXPECT_EQ(cf_expand(q(24, 7)), cf({3, 2, 3}));
}

TEST(CfExpand, IntegerAndNegativeInputs) {
  EXPECT_EQ(cf_expand(q(7)), cf({7}));
  EXPECT_EQ(cf_expand(q(0)), cf({0}));
  EXPECT_EQ(cf_expand(q(1)), cf({1}));
  EXPECT_EQ(cf_expand(q(-7, 3)), cf({-3, 1, 2}));
  EXPECT_EQ(cf_expand(q(7, 22)), cf({0, 3, 7}));
}

TEST(CfValue, Examples) {
  EXPECT_EQ(cf_value(cf({3, 2, 3})), q(24, 7));
  EXPECT_EQ(cf_value(cf({0})), q(0));
  EXPECT_EQ(cf_value(cf({0, 3, 7})), q(7, 22));
  EXPECT_EQ(cf_value(cf({0, 3, 7})), nested_value(cf({0, 3, 7}).digits()));
}

TEST(CfCanonicalize, Examples) {
  EXPECT_EQ(cf_canonicalize(cf({1, 1, 1})), cf({1, 2}));
  EXPECT_EQ(cf_canonicalize(cf({0, 1, 1, 1})), cf({0, 1, 2}));
  EXPECT_EQ(cf_canonicalize(cf({5})), cf({5}));
  EXPECT_EQ(cf_canonicalize(cf({6, 1})), cf({7}));
}

TEST(CfConvergents, FiniteExamples) {
  EXPECT_EQ(cf_convergents(cf({3, 2, 3}), 3), (std::vector<Rational>{q(3), q(7, 2), q(24, 7)}));
  EXPECT_EQ(cf_convergents(cf({7}), 1), (std::vector<Rational>{q(7)}));
  EXPECT_EQ(cf_convergents(cf({0, 3, 7}), 3), (std::vector<Rational>{q(0), q(1, 3), q(7, 22)}));
}

TEST(CfConvergents, TooManyRequestedThrows) {
  EXPECT_THROW(cf_convergents(cf({3, 2, 3}), 4), OutOfDigits);
}

TEST(CfConvergents, StreamMatchesTruncations) {
  const auto cs = cf_convergents(CFStream::sqrt2(), 6);
  const std::vector<Rational> expected{q(1), q(3, 2), q(7, 5), q(17, 12), q(41, 29), q(99, 70)};
  EXPECT_EQ(cs, expected);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::vector<Integer> ds{1};
    for (std::size_t i = 0; i < k; ++i) ds.emplace_back(2);
    EXPECT_EQ(cs[k], nested_value(ds));
  }
}

TEST(CFStream, PeriodicDigitsAndMetadata) {
  const CFStream s = CFStream::periodic({Integer(2), Integer(1)}, {Integer(1), Integer(4)});
  const std::vector<int> expected{2, 1, 1, 4, 1, 4, 1};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(s.digit(i), expected[i]);
  EXPECT_EQ(CFStream::sqrt2().to_string(), "[1; (2)]");
}

TEST(CFStream, InvalidDigitsRejected) {
  EXPECT_THROW(CFStream::periodic({Integer(1)}, {Integer(0)}), InvalidArgument);
  EXPECT_THROW(CFStream::periodic({Integer(1)}, {}), InvalidArgument);
  const CFStream bad([](std::size_t i) { return Integer(i == 3 ? 0 : 1); });
  EXPECT_NO_THROW(bad.digit(2));
  EXPECT_THROW(bad.digit(3), InvalidArgument);
  const CFStream liar([](std::size_t) { return Integer(3); }, CFStream::Periodic{{Integer(1)}, {Integer(2)}});
  EXPECT_THROW(liar.digit(0), InvalidArgument);
}

TEST(StreamCompare, Sqrt2Examples) {
  const CFStream r = CFStream::sqrt2();
  EXPECT_EQ(stream_compare(r, q(3, 2), 64), std::strong_ordering::less);
  EXPECT_EQ(stream_compare(r, q(1), 64), std::strong_ordering::greater);
  EXPECT_EQ(stream_compare(r, q(7, 5), 64), std::strong_ordering::greater);
}

TEST(StreamCompare, IndecisiveWithinSmallBudget) {
  // [1; 1, 1, ...] is the golden ratio; a far convergent stays inside every
  // bracket within a small budget.
  const CFStream phi = CFStream::periodic({Integer(1)}, {Integer(1)});
  EXPECT_THROW(stream_compare(phi, q(6765, 4181), 8), IndecisiveComparison);
  EXPECT_EQ(stream_compare(phi, q(6765, 4181), 64), std::strong_ordering::greater);
}

TEST(StreamCompare, AgreesWithSquaringOracle) {
  Gen gen(11);
  const CFStream r = CFStream::sqrt2();
  for (int i = 0; i < 2000; ++i) {
    const Rational t(Integer(gen.range(-300, 300)), Integer(gen.range(1, 200)));
    ASSERT_EQ(stream_compare(r, t, 256), sqrt2_vs(t)) << t.to_string() << " " << testing::seed_note(gen);
  }
}

TEST(Properties, RoundTrip) {
  Gen gen(1);
  for (int i = 0; i < 3000; ++i) {
    const Rational r = gen.rational(100000);
    const CFExpansion e = cf_expand(r);
    ASSERT_EQ(cf_value(e), r) << r.to_string() << " " << testing::seed_note(gen);
    ASSERT_EQ(nested_value(e.digits()), r);
    ASSERT_TRUE(e.is_canonical()) << e.to_string();
  }
}

TEST(Properties, CanonicalDigitsNeverEndInOne) {
  Gen gen(2);
  for (int i = 0; i < 3000; ++i) {
    const CFExpansion e = cf_expand(gen.rational(5000));
    if (e.size() > 1) {
      ASSERT_GE(e.digits().back(), 2) << e.to_string();
    }
  }
}

TEST(Properties, EuclidEquivalence) {
  for (std::int64_t a = 2; a <= 120; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(cf_expand(q(a, b)).digits(), euclid_quotients(a, b)) << a << "/" << b;
    }
  }
}

TEST(Properties, ConvergentsAlternateAroundValue) {
  Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    const Rational r = gen.positive_rational(100000);
    const CFExpansion e = cf_expand(r);
    if (e.size() < 3) continue;
    const auto cs = cf_convergents(e, e.size());
    for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
      if (k % 2 == 0) {
        ASSERT_LT(cs[k], r);
        if (k + 2 < cs.size()) {
          ASSERT_LT(cs[k], cs[k + 2]);
        }
      } else {
        ASSERT_GT(cs[k], r);
        if (k + 2 < cs.size()) {
          ASSERT_GT(cs[k], cs[k + 2]);
        }
      }
    }
    ASSERT_EQ(cs.back(), r);
  }
}

TEST(Properties, BothExpansionsShareValueAndDigitSum) {
  Gen gen(4);
  for (int i = 0; i < 2000; ++i) {
    const Rational r = gen.rational(5000);
    if (r.is_integer()) continue;
    const CFExpansion e = cf_expand(r);
    const CFExpansion alt = e.alternate();
    ASSERT_EQ(cf_value(alt), r);
    ASSERT_EQ(alt.digit_sum(), e.digit_sum());
    ASSERT_EQ(cf_canonicalize(alt), e);
  }
}

}  // namespace
}  // namespace cuspval
