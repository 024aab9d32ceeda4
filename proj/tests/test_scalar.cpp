#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vecq/scalar.hpp"

using namespace vecq;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST(Rational, NormalizesOnConstruction) {
  Rational r = q(2, 4);
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "1/2");
}

TEST(Rational, CanonicalizesSign) {
  EXPECT_EQ(q(-3, -6).to_string(), "1/2");
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_GT(q(3, -6).denominator(), 0);
}

TEST(Rational, ZeroIsZeroOverOne) {
  Rational z = q(0, -7);
  EXPECT_EQ(z.numerator(), 0);
  EXPECT_EQ(z.denominator(), 1);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Rational, ExactAddition) { EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2)); }

TEST(Rational, Ordering) {
  EXPECT_LT(q(-17, 29), q(1, 29));
  EXPECT_GT(q(7, 150), q(0, 1));
  EXPECT_EQ(q(10, 29) <=> q(20, 58), std::strong_ordering::equal);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(q(1, 2) / Rational(0), MathError);
  EXPECT_THROW(q(1, 0), MathError);
  try {
    (void)(q(1, 2) / Rational(0));
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), MathError::Kind::DivisionByZeroScalar);
  }
}

TEST(Rational, TextFormAndParse) {
  EXPECT_EQ(q(-17, 29).to_string(), "-17/29");
  EXPECT_EQ(Rational(3).to_string(), "3");
  EXPECT_EQ(Rational::parse("-17/29"), q(-17, 29));
  EXPECT_EQ(Rational::parse("6/4"), q(3, 2));
  EXPECT_EQ(Rational::parse("1.25"), q(5, 4));
  EXPECT_EQ(Rational::parse("-0.5"), q(-1, 2));
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
}

TEST(Rational, LargeValuesDoNotOverflow) {
  Rational r = q(1, 3);
  for (int i = 0; i < 80; ++i) r *= q(7, 3);
  EXPECT_GT(r.denominator(), BigInt(std::numeric_limits<std::int64_t>::max()));
  for (int i = 0; i < 80; ++i) r /= q(7, 3);
  EXPECT_EQ(r, q(1, 3));
}

TEST(RationalProperties, FieldLaws) {
  test_support::RationalGen gen(7);
  for (int i = 0; i < 1000; ++i) {
    Rational x = gen.rational(), y = gen.rational(), z = gen.rational();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + (-x), Rational(0));
    if (!x.is_zero()) EXPECT_EQ(x * (Rational(1) / x), Rational(1));
  }
}

TEST(Scalar, MixedModeCoercesToApprox) {
  Scalar e = q(1, 3);
  Scalar a = Scalar::approx(0.5);
  EXPECT_EQ((e + a).mode(), Mode::Approx);
  EXPECT_EQ((a * e).mode(), Mode::Approx);
  EXPECT_EQ((e * e).mode(), Mode::Exact);
}

TEST(Scalar, RejectsNonFinite) {
  EXPECT_THROW(Scalar::approx(std::numeric_limits<double>::quiet_NaN()), MathError);
  EXPECT_THROW(Scalar::approx(std::numeric_limits<double>::infinity()), MathError);
  EXPECT_THROW(Scalar::approx(1e308) * Scalar::approx(1e308), MathError);
  EXPECT_THROW(Scalar::approx(1.0) / Scalar::approx(0.0), MathError);
}

TEST(Scalar, CoercionMonotonicity) {
  test_support::RationalGen gen(11);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = Rational(BigInt(static_cast<std::int64_t>(gen.real(-1e6, 1e6))), BigInt(1)) / Scalar(gen.nonzero_rational());
    Scalar y = gen.nonzero_rational();
    Scalar xa = x.to_mode(Mode::Approx), ya = y.to_mode(Mode::Approx);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
    EXPECT_TRUE(close((x + y).to_double(), (xa + ya).to_double()));
    EXPECT_TRUE(close((x - y).to_double(), (xa - ya).to_double()));
    EXPECT_TRUE(close((x * y).to_double(), (xa * ya).to_double()));
    EXPECT_TRUE(close((x / y).to_double(), (xa / ya).to_double()));
  }
}

TEST(SqrtScalar, PerfectSquareStaysExact) {
  Scalar r = sqrt_scalar(Scalar(q(9, 4)));
  ASSERT_TRUE(r.is_exact());
  EXPECT_EQ(r.rational(), q(3, 2));
}

TEST(SqrtScalar, NonSquareGoesApprox) {
  Scalar r = sqrt_scalar(Scalar(2));
  ASSERT_FALSE(r.is_exact());
  EXPECT_EQ(r.to_double(), 1.4142135623730951);
}

TEST(SqrtScalar, WithinOneUlpOfArbitraryPrecisionRoot) {
  // sqrt(411) to 40 digits from an independent arbitrary-precision routine.
  const long double reference = 20.27313493271329262771887552164499897514L;
  double got = sqrt_scalar(Scalar(411)).to_double();
  double ulp = std::nextafter(got, 100.0) - got;
  EXPECT_LE(std::fabs(static_cast<long double>(got) - reference), static_cast<long double>(ulp));
}

TEST(SqrtScalar, NegativeThrows) {
  try {
    sqrt_scalar(Scalar(-1));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), MathError::Kind::NegativeSqrt);
  }
}

TEST(Scalar, IntegerPower) {
  EXPECT_EQ(pow(Scalar(q(2, 3)), 3), Scalar(q(8, 27)));
  EXPECT_EQ(pow(Scalar(q(2, 3)), -2), Scalar(q(9, 4)));
  EXPECT_THROW(pow(Scalar(0), -1), MathError);
}

TEST(Scalar, ApproxTextForm) {
  EXPECT_EQ(to_string(Scalar::approx(0.5), 3), "0.500");
  EXPECT_EQ(to_string(Scalar::approx(-1e-20), 4), "0.0000");
  EXPECT_EQ(to_string(Scalar(q(-17, 29))), "-17/29");
}
