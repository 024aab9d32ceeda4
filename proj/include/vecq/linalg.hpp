#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>

#include "vecq/errors.hpp"
#include "vecq/scalar.hpp"

namespace vecq {

/// Fixed-dimension column vector of Scalars. All components share one mode:
/// if any component is Approx on construction, every component is coerced.
template <std::size_t N>
class Vec {
  static_assert(N == 2 || N == 3, "only 2D and 3D vectors are supported");

public:
  static constexpr std::size_t dim = N;

  Vec() = default;
  Vec(std::initializer_list<Scalar> components);
  explicit Vec(const std::array<Scalar, N>& components);

  static Vec zero(Mode mode = Mode::Exact);

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Mode mode() const { return c_[0].mode(); }
  bool is_zero() const;
  Vec to_mode(Mode mode) const;

  Vec operator-() const;
  Vec& operator+=(const Vec& rhs);
  Vec& operator-=(const Vec& rhs);
  Vec& operator*=(const Scalar& k);
  Vec& operator/=(const Scalar& k);

  friend Vec operator+(Vec lhs, const Vec& rhs) { return lhs += rhs; }
  friend Vec operator-(Vec lhs, const Vec& rhs) { return lhs -= rhs; }
  friend Vec operator*(Vec v, const Scalar& k) { return v *= k; }
  friend Vec operator*(const Scalar& k, Vec v) { return v *= k; }
  friend Vec operator/(Vec v, const Scalar& k) { return v /= k; }
  friend bool operator==(const Vec& lhs, const Vec& rhs) { return lhs.c_ == rhs.c_; }

private:
  void unify_mode();

  std::array<Scalar, N> c_{};
};

using Vector2 = Vec<2>;
using Vector3 = Vec<3>;

/// Square N x N matrix with row-major indexing m(row, col).
template <std::size_t N>
class Mat {
  static_assert(N == 2 || N == 3, "only 2x2 and 3x3 matrices are supported");

public:
  static constexpr std::size_t dim = N;
  using Rows = std::array<std::array<Scalar, N>, N>;

  Mat() = default;
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);
  explicit Mat(const Rows& rows);

  static Mat identity(Mode mode = Mode::Exact);
  static Mat zero(Mode mode = Mode::Exact);

  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
  Vec<N> row(std::size_t r) const { return Vec<N>(m_[r]); }
  Mode mode() const { return m_[0][0].mode(); }
  bool is_zero() const;
  bool is_skew_symmetric() const;
  Mat to_mode(Mode mode) const;

  Mat operator-() const;
  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const Scalar& k);
  Mat& operator/=(const Scalar& k);

  friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
  friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
  friend Mat operator*(Mat m, const Scalar& k) { return m *= k; }
  friend Mat operator*(const Scalar& k, Mat m) { return m *= k; }
  friend Mat operator/(Mat m, const Scalar& k) { return m /= k; }
  friend bool operator==(const Mat& lhs, const Mat& rhs) { return lhs.m_ == rhs.m_; }

private:
  void unify_mode();

  Rows m_{};
};

using Matrix2 = Mat<2>;
using Matrix3 = Mat<3>;

template <std::size_t N>
Scalar dot(const Vec<N>& a, const Vec<N>& b);

template <std::size_t N>
Scalar norm_sq(const Vec<N>& a) {
  return dot(a, a);
}

Vector3 cross3(const Vector3& a, const Vector3& b);

/// a . (R b) with R the counterclockwise quarter turn: a_y b_x - a_x b_y.
Scalar perp_dot(const Vector2& a, const Vector2& b);

template <std::size_t N>
Mat<N> operator*(const Mat<N>& lhs, const Mat<N>& rhs);

template <std::size_t N>
Vec<N> operator*(const Mat<N>& m, const Vec<N>& v);

template <std::size_t N>
Mat<N> transpose(const Mat<N>& m);

template <std::size_t N>
Scalar det(const Mat<N>& m);
template <>
Scalar det(const Mat<2>& m);
template <>
Scalar det(const Mat<3>& m);

/// Throws MathError(SingularMatrix) when det(m) == 0.
template <std::size_t N>
Mat<N> inverse(const Mat<N>& m);
template <>
Mat<2> inverse(const Mat<2>& m);
template <>
Mat<3> inverse(const Mat<3>& m);

/// Standard cross-product matrix [v]x, so that [v]x w == cross3(v, w).
Matrix3 cross_matrix(const Vector3& v);

/// Sum of squared entries.
template <std::size_t N>
Scalar frobenius_sq(const Mat<N>& m);

/// Entrywise |x - y| <= tol * max(1, |x|, |y|), computed in doubles.
bool approx_equal(const Scalar& x, const Scalar& y, double tol);
template <std::size_t N>
bool approx_equal(const Vec<N>& x, const Vec<N>& y, double tol);
template <std::size_t N>
bool approx_equal(const Mat<N>& x, const Mat<N>& y, double tol);

/// "[x, y]" / "[x, y, z]".
template <std::size_t N>
std::string to_string(const Vec<N>& v, int precision = 12);

/// "[[a, b], [c, d]]" row list.
template <std::size_t N>
std::string to_string(const Mat<N>& m, int precision = 12);

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Vec<N>& v);
template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Mat<N>& m);

}  // namespace vecq
