#pragma once

#include <cstddef>
#include <optional>

#include "vecq/linalg.hpp"

// Vector division and the matching vector product.
//
// For b != 0 the quotient a / b is the matrix E = alpha I + beta R that maps b
// onto a, where alpha b is the projection of a onto b, R is a quarter-turn
// perpendicular rotation and beta b_perp is the rejection. The product a (x) b
// is the same construction without the 1/|b|^2 normalization, so that
// a / b == a (x) inverse(b).
//
// In 3D beta and R each carry the irrational factor |a x b|, but their product
// does not: beta R = [a x b]x^T / |b|^2. divide() and multiply() use that
// closed form, so rational inputs give exactly rational matrices.

namespace vecq {

/// Which of the two perpendiculars of a 2D vector is used as b_perp.
enum class Orientation { Ccw, Cw };

/// Sign of the 3D rotation axis relative to cross3(a, b).
enum class AxisSense { Positive, Negative };

template <std::size_t N>
struct DecompCoefficients {
  Scalar alpha;
  Scalar beta;
  Vec<N> parallel_part;  ///< alpha * b
  Vec<N> perp_part;      ///< beta * (R b); parallel_part + perp_part == a
};

template <std::size_t N>
struct PerpRotation {
  Mat<N> matrix;
  /// Unit axis n, populated only for a 3D rotation built from an Approx axis.
  std::optional<Vector3> axis;
};

template <std::size_t N>
struct QuotientMatrix {
  Mat<N> matrix;       ///< alpha I + beta_times_r
  Scalar alpha;        ///< symmetric coefficient
  Mat<N> beta_times_r; ///< skew-symmetric part
};

struct QuotientDiagnostics {
  double theta = 0.0;            ///< angle between a and b, in [0, pi]
  double magnitude_ratio = 0.0;  ///< |a| / |b|
  Scalar det;                    ///< exact determinant of divide(a, b)
};

/// CCW: (-b_y, b_x); CW: (b_y, -b_x).
Vector2 perp_2d(const Vector2& b, Orientation o = Orientation::Ccw);

/// Unit vector along cross3(a, b), always Approx. Throws ParallelVectors when
/// the cross product vanishes.
Vector3 axis_of(const Vector3& a, const Vector3& b);

/// 2D: [[0,-1],[1,0]] for CCW, its transpose for CW.
PerpRotation<2> perp_rotation(Orientation o);

/// 3D: [[0,C,-B],[-C,0,A],[B,-A,0]] for axis (A,B,C), i.e. the transpose of
/// the cross-product matrix. Accepts a unit Approx axis or a raw (unnormalized)
/// exact axis such as cross3(a, b). Throws ZeroAxis for the zero vector.
PerpRotation<3> perp_rotation(const Vector3& axis);

DecompCoefficients<2> decompose(const Vector2& a, const Vector2& b, Orientation o = Orientation::Ccw);

/// 3D beta is |a x b| / |b|^2 and is Exact only when |a x b|^2 is a perfect
/// square. perp_part is always exact.
DecompCoefficients<3> decompose(const Vector3& a, const Vector3& b);

/// Throws DivisionByZeroVector when b is zero. Result is independent of `o`.
QuotientMatrix<2> divide(const Vector2& a, const Vector2& b, Orientation o = Orientation::Ccw);

/// Throws DivisionByZeroVector when b is zero. Result is independent of `sense`.
QuotientMatrix<3> divide(const Vector3& a, const Vector3& b, AxisSense sense = AxisSense::Positive);

/// a (x) b = (a.b) I + skew part. Total: zero operands give the zero matrix.
QuotientMatrix<2> multiply(const Vector2& a, const Vector2& b);
QuotientMatrix<3> multiply(const Vector3& a, const Vector3& b);

/// a / |a|^2. Throws ZeroVectorInverse for a == 0.
template <std::size_t N>
Vec<N> inverse(const Vec<N>& a);

/// a / |a|, Exact when |a|^2 is a perfect square. Throws ZeroVectorInverse.
template <std::size_t N>
Vec<N> identity_element(const Vec<N>& a);

/// Throws DivisionByZeroVector when either vector is zero.
QuotientDiagnostics diagnostics(const Vector2& a, const Vector2& b);
QuotientDiagnostics diagnostics(const Vector3& a, const Vector3& b);

}  // namespace vecq
