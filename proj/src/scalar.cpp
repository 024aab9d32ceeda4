#include "vecq/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "vecq/errors.hpp"

namespace vecq {

namespace mp = boost::multiprecision;

// -------------------------------------------------------------- Rational

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw_math(MathError::Kind::DivisionByZeroScalar);
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Impl(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("invalid rational literal: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view digits, bool allow_sign) -> BigInt {
    bool neg = false;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw fail();
    BigInt v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw fail();
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty() || frac.empty()) throw fail();
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = parse_int(whole, false) * scale + parse_int(frac, false);
    return Rational(neg ? BigInt(-num) : num, scale);
  }
  return Rational(parse_int(text, true), BigInt(1));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_zero() const { return value_.is_zero(); }
bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
int Rational::sign() const { return value_.sign(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

bool Rational::exact_sqrt(Rational& root) const {
  if (sign() < 0) return false;
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt rn = mp::sqrt(num);
  BigInt rd = mp::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(std::move(rn), std::move(rd));
  return true;
}

std::string Rational::to_string() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

Rational Rational::operator-() const { return Rational(Impl(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw_math(MathError::Kind::DivisionByZeroScalar);
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------- Scalar

namespace {

double checked(double v) {
  if (!std::isfinite(v)) throw_math(MathError::Kind::NonFinite);
  return v;
}

}  // namespace

Scalar::Scalar(double value) : value_(checked(value)) {}

Scalar Scalar::approx(double value) { return Scalar(value); }

Scalar Scalar::zero(Mode mode) { return mode == Mode::Exact ? Scalar(Rational{}) : Scalar(0.0); }

Scalar Scalar::one(Mode mode) { return mode == Mode::Exact ? Scalar(Rational(1)) : Scalar(1.0); }

const Rational& Scalar::rational() const { return std::get<Rational>(value_); }

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_double();
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(Mode mode) const {
  if (mode == Mode::Approx && is_exact()) return Scalar(to_double());
  return *this;
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
  return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  double v = std::get<double>(value_);
  return (v > 0.0) - (v < 0.0);
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(-*r);
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) += rhs.rational();
  } else {
    value_ = checked(to_double() + rhs.to_double());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) -= rhs.rational();
  } else {
    value_ = checked(to_double() - rhs.to_double());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) *= rhs.rational();
  } else {
    value_ = checked(to_double() * rhs.to_double());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw_math(MathError::Kind::DivisionByZeroScalar);
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) /= rhs.rational();
  } else {
    value_ = checked(to_double() / rhs.to_double());
  }
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.rational() == rhs.rational();
  return lhs.to_double() == rhs.to_double();
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.rational() <=> rhs.rational();
  return lhs.to_double() <=> rhs.to_double();
}

Scalar sqrt_scalar(const Scalar& x) {
  if (x.sign() < 0) throw_math(MathError::Kind::NegativeSqrt);
  if (x.is_exact()) {
    Rational root;
    if (x.rational().exact_sqrt(root)) return Scalar(std::move(root));
  }
  return Scalar::approx(std::sqrt(x.to_double()));
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& base, int exponent) {
  Scalar result = Scalar::one(base.mode());
  Scalar factor = exponent < 0 ? Scalar::one(base.mode()) / base : base;
  for (unsigned n = exponent < 0 ? -static_cast<unsigned>(exponent) : exponent; n != 0; n >>= 1) {
    if (n & 1U) result *= factor;
    if (n > 1) factor *= factor;
  }
  return result;
}

std::string to_string(const Scalar& x, int precision) {
  if (x.is_exact()) return x.rational().to_string();
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << x.to_double();
  std::string text = os.str();
  // Values that round to zero print without a sign.
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  return text;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

}  // namespace vecq
