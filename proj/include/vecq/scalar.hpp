#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace vecq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always normalized: the denominator is positive, gcd(|num|, den) == 1 and
/// zero is stored as 0/1. All arithmetic is exact.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "p", "-p", "p/q" or a plain decimal such as "1.25" or "-0.5".
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;
  double to_double() const;

  /// Exact square root when both numerator and denominator are perfect squares.
  bool exact_sqrt(Rational& root) const;

  /// Canonical text form: "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit Rational(Impl value) : value_(std::move(value)) {}

  Impl value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class Mode { Exact, Approx };

/// A number that is either an exact Rational or a finite double.
///
/// Binary operations between an Exact and an Approx operand coerce to Approx.
/// Constructing an Approx scalar from NaN or infinity throws MathError.
class Scalar {
public:
  Scalar() : value_(Rational{}) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static Scalar approx(double value);
  static Scalar zero(Mode mode);
  static Scalar one(Mode mode);

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::Exact : Mode::Approx; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Precondition: is_exact().
  const Rational& rational() const;
  double to_double() const;

  Scalar to_mode(Mode mode) const;

  bool is_zero() const;
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact comparison when both sides are Exact, double comparison otherwise.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

private:
  explicit Scalar(double value);

  std::variant<Rational, double> value_;
};

/// Square root. Exact for perfect-square rationals, Approx otherwise.
Scalar sqrt_scalar(const Scalar& x);

Scalar abs(const Scalar& x);

/// Integer power; negative exponents take the reciprocal.
Scalar pow(const Scalar& base, int exponent);

/// Canonical text: Rational form for Exact, fixed-point with `precision`
/// fractional digits for Approx.
std::string to_string(const Scalar& x, int precision = 12);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Mode that results from combining operands of the given modes.
constexpr Mode join(Mode a, Mode b) {
  return a == Mode::Approx || b == Mode::Approx ? Mode::Approx : Mode::Exact;
}

}  // namespace vecq
