#include "vecq/quotient.hpp"

#include <cmath>

namespace vecq {

namespace {

// Transpose of the cross-product matrix: skew_t(v) w == cross3(w, v).
Matrix3 skew_t(const Vector3& v) { return transpose(cross_matrix(v)); }

void require_nonzero_divisor(bool is_zero) {
  if (is_zero) throw_math(MathError::Kind::DivisionByZeroVector);
}

}  // namespace

Vector2 perp_2d(const Vector2& b, Orientation o) {
  return o == Orientation::Ccw ? Vector2{-b[1], b[0]} : Vector2{b[1], -b[0]};
}

Vector3 axis_of(const Vector3& a, const Vector3& b) {
  Vector3 c = cross3(a, b);
  if (c.is_zero()) throw_math(MathError::Kind::ParallelVectors);
  return c.to_mode(Mode::Approx) / sqrt_scalar(norm_sq(c).to_mode(Mode::Approx));
}

PerpRotation<2> perp_rotation(Orientation o) {
  Matrix2 ccw{{0, -1}, {1, 0}};
  return {o == Orientation::Ccw ? ccw : transpose(ccw), std::nullopt};
}

PerpRotation<3> perp_rotation(const Vector3& axis) {
  if (axis.is_zero()) throw_math(MathError::Kind::ZeroAxis);
  PerpRotation<3> r{skew_t(axis), std::nullopt};
  if (axis.mode() == Mode::Approx) r.axis = axis;
  return r;
}

DecompCoefficients<2> decompose(const Vector2& a, const Vector2& b, Orientation o) {
  Scalar b2 = norm_sq(b);
  require_nonzero_divisor(b2.is_zero());
  Vector2 b_perp = perp_2d(b, o);
  Scalar alpha = dot(a, b) / b2;
  Scalar beta = dot(a, b_perp) / b2;
  return {alpha, beta, alpha * b, beta * b_perp};
}

DecompCoefficients<3> decompose(const Vector3& a, const Vector3& b) {
  Scalar b2 = norm_sq(b);
  require_nonzero_divisor(b2.is_zero());
  Vector3 c = cross3(a, b);
  Scalar alpha = dot(a, b) / b2;
  Scalar beta = sqrt_scalar(norm_sq(c)) / b2;
  // beta R b with R built from n = c/|c| reduces to (b x c) / |b|^2.
  return {alpha, beta, alpha * b, cross3(b, c) / b2};
}

QuotientMatrix<2> divide(const Vector2& a, const Vector2& b, Orientation o) {
  Scalar b2 = norm_sq(b);
  require_nonzero_divisor(b2.is_zero());
  Matrix2 r = perp_rotation(o).matrix;
  Scalar alpha = dot(a, b) / b2;
  Scalar beta = dot(a, r * b) / b2;
  Matrix2 skew = beta * r;
  Mode mode = join(a.mode(), b.mode());
  return {Matrix2::identity(mode) * alpha + skew, alpha, skew};
}

QuotientMatrix<3> divide(const Vector3& a, const Vector3& b, AxisSense sense) {
  Scalar b2 = norm_sq(b);
  require_nonzero_divisor(b2.is_zero());
  Scalar sign = sense == AxisSense::Positive ? 1 : -1;
  // Flipping the axis flips beta too; the product is unchanged.
  Scalar beta_raw = sign / b2;
  Matrix3 skew = beta_raw * skew_t(sign * cross3(a, b));
  Scalar alpha = dot(a, b) / b2;
  Mode mode = join(a.mode(), b.mode());
  return {Matrix3::identity(mode) * alpha + skew, alpha, skew};
}

QuotientMatrix<2> multiply(const Vector2& a, const Vector2& b) {
  Scalar alpha = dot(a, b);
  Matrix2 skew = perp_dot(a, b) * perp_rotation(Orientation::Ccw).matrix;
  return {Matrix2::identity(alpha.mode()) * alpha + skew, alpha, skew};
}

QuotientMatrix<3> multiply(const Vector3& a, const Vector3& b) {
  Scalar alpha = dot(a, b);
  Matrix3 skew = skew_t(cross3(a, b));
  return {Matrix3::identity(alpha.mode()) * alpha + skew, alpha, skew};
}

template <std::size_t N>
Vec<N> inverse(const Vec<N>& a) {
  if (a.is_zero()) throw_math(MathError::Kind::ZeroVectorInverse);
  return a / norm_sq(a);
}

template <std::size_t N>
Vec<N> identity_element(const Vec<N>& a) {
  if (a.is_zero()) throw_math(MathError::Kind::ZeroVectorInverse);
  return a / sqrt_scalar(norm_sq(a));
}

template Vec<2> inverse<2>(const Vec<2>&);
template Vec<3> inverse<3>(const Vec<3>&);
template Vec<2> identity_element<2>(const Vec<2>&);
template Vec<3> identity_element<3>(const Vec<3>&);

namespace {

template <std::size_t N>
QuotientDiagnostics diagnostics_impl(const Vec<N>& a, const Vec<N>& b, const Scalar& skew_norm_sq) {
  require_nonzero_divisor(a.is_zero() || b.is_zero());
  QuotientDiagnostics d;
  d.theta = std::atan2(std::sqrt(skew_norm_sq.to_double()), dot(a, b).to_double());
  d.magnitude_ratio = std::sqrt(norm_sq(a).to_double() / norm_sq(b).to_double());
  d.det = det(divide(a, b).matrix);
  return d;
}

}  // namespace

QuotientDiagnostics diagnostics(const Vector2& a, const Vector2& b) {
  Scalar p = perp_dot(a, b);
  return diagnostics_impl(a, b, p * p);
}

QuotientDiagnostics diagnostics(const Vector3& a, const Vector3& b) {
  return diagnostics_impl(a, b, norm_sq(cross3(a, b)));
}

}  // namespace vecq
