#include "vecq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vecq {

// ------------------------------------------------------------------- Vec

template <std::size_t N>
Vec<N>::Vec(std::initializer_list<Scalar> components) {
  if (components.size() != N) throw DimensionMismatch(N, components.size());
  std::copy(components.begin(), components.end(), c_.begin());
  unify_mode();
}

template <std::size_t N>
Vec<N>::Vec(const std::array<Scalar, N>& components) : c_(components) {
  unify_mode();
}

template <std::size_t N>
Vec<N> Vec<N>::zero(Mode mode) {
  Vec v;
  v.c_.fill(Scalar::zero(mode));
  return v;
}

template <std::size_t N>
void Vec<N>::unify_mode() {
  Mode m = Mode::Exact;
  for (const auto& x : c_) m = join(m, x.mode());
  if (m == Mode::Approx)
    for (auto& x : c_) x = x.to_mode(m);
}

template <std::size_t N>
bool Vec<N>::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

template <std::size_t N>
Vec<N> Vec<N>::to_mode(Mode mode) const {
  Vec v = *this;
  for (auto& x : v.c_) x = x.to_mode(mode);
  return v;
}

template <std::size_t N>
Vec<N> Vec<N>::operator-() const {
  Vec v = *this;
  for (auto& x : v.c_) x = -x;
  return v;
}

template <std::size_t N>
Vec<N>& Vec<N>::operator+=(const Vec& rhs) {
  for (std::size_t i = 0; i < N; ++i) c_[i] += rhs.c_[i];
  return *this;
}

template <std::size_t N>
Vec<N>& Vec<N>::operator-=(const Vec& rhs) {
  for (std::size_t i = 0; i < N; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

template <std::size_t N>
Vec<N>& Vec<N>::operator*=(const Scalar& k) {
  for (auto& x : c_) x *= k;
  unify_mode();
  return *this;
}

template <std::size_t N>
Vec<N>& Vec<N>::operator/=(const Scalar& k) {
  if (k.is_zero()) throw_math(MathError::Kind::DivisionByZeroScalar);
  for (auto& x : c_) x /= k;
  unify_mode();
  return *this;
}

// ------------------------------------------------------------------- Mat

template <std::size_t N>
Mat<N>::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  if (rows.size() != N) throw DimensionMismatch(N, rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != N) throw DimensionMismatch(N, row.size());
    std::copy(row.begin(), row.end(), m_[r++].begin());
  }
  unify_mode();
}

template <std::size_t N>
Mat<N>::Mat(const Rows& rows) : m_(rows) {
  unify_mode();
}

template <std::size_t N>
Mat<N> Mat<N>::identity(Mode mode) {
  Mat m = zero(mode);
  for (std::size_t i = 0; i < N; ++i) m.m_[i][i] = Scalar::one(mode);
  return m;
}

template <std::size_t N>
Mat<N> Mat<N>::zero(Mode mode) {
  Mat m;
  for (auto& row : m.m_) row.fill(Scalar::zero(mode));
  return m;
}

template <std::size_t N>
void Mat<N>::unify_mode() {
  Mode mode = Mode::Exact;
  for (const auto& row : m_)
    for (const auto& x : row) mode = join(mode, x.mode());
  if (mode == Mode::Approx)
    for (auto& row : m_)
      for (auto& x : row) x = x.to_mode(mode);
}

template <std::size_t N>
bool Mat<N>::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

template <std::size_t N>
bool Mat<N>::is_skew_symmetric() const {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r; c < N; ++c)
      if (m_[r][c] != -m_[c][r]) return false;
  return true;
}

template <std::size_t N>
Mat<N> Mat<N>::to_mode(Mode mode) const {
  Mat m = *this;
  for (auto& row : m.m_)
    for (auto& x : row) x = x.to_mode(mode);
  return m;
}

template <std::size_t N>
Mat<N> Mat<N>::operator-() const {
  Mat m = *this;
  for (auto& row : m.m_)
    for (auto& x : row) x = -x;
  return m;
}

template <std::size_t N>
Mat<N>& Mat<N>::operator+=(const Mat& rhs) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m_[r][c] += rhs.m_[r][c];
  return *this;
}

template <std::size_t N>
Mat<N>& Mat<N>::operator-=(const Mat& rhs) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m_[r][c] -= rhs.m_[r][c];
  return *this;
}

template <std::size_t N>
Mat<N>& Mat<N>::operator*=(const Scalar& k) {
  for (auto& row : m_)
    for (auto& x : row) x *= k;
  unify_mode();
  return *this;
}

template <std::size_t N>
Mat<N>& Mat<N>::operator/=(const Scalar& k) {
  if (k.is_zero()) throw_math(MathError::Kind::DivisionByZeroScalar);
  for (auto& row : m_)
    for (auto& x : row) x /= k;
  unify_mode();
  return *this;
}

// ------------------------------------------------------------ operations

template <std::size_t N>
Scalar dot(const Vec<N>& a, const Vec<N>& b) {
  Scalar s = Scalar::zero(join(a.mode(), b.mode()));
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

Vector3 cross3(const Vector3& a, const Vector3& b) {
  return Vector3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar perp_dot(const Vector2& a, const Vector2& b) { return a[1] * b[0] - a[0] * b[1]; }

template <std::size_t N>
Mat<N> operator*(const Mat<N>& lhs, const Mat<N>& rhs) {
  typename Mat<N>::Rows out;
  Mode mode = join(lhs.mode(), rhs.mode());
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      Scalar s = Scalar::zero(mode);
      for (std::size_t k = 0; k < N; ++k) s += lhs(r, k) * rhs(k, c);
      out[r][c] = s;
    }
  }
  return Mat<N>(out);
}

template <std::size_t N>
Vec<N> operator*(const Mat<N>& m, const Vec<N>& v) {
  std::array<Scalar, N> out;
  for (std::size_t r = 0; r < N; ++r) out[r] = dot(m.row(r), v);
  return Vec<N>(out);
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& m) {
  typename Mat<N>::Rows out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[c][r] = m(r, c);
  return Mat<N>(out);
}

template <>
Scalar det(const Mat<2>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <>
Scalar det(const Mat<3>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <>
Mat<2> inverse(const Mat<2>& m) {
  Scalar d = det(m);
  if (d.is_zero()) throw_math(MathError::Kind::SingularMatrix);
  return Mat<2>{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}} / d;
}

template <>
Mat<3> inverse(const Mat<3>& m) {
  Scalar d = det(m);
  if (d.is_zero()) throw_math(MathError::Kind::SingularMatrix);
  // Adjugate: cofactor (r, c) of m lands at (c, r).
  Mat<3>::Rows adj;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      std::size_t c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      adj[c][r] = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return Mat<3>(adj) / d;
}

Matrix3 cross_matrix(const Vector3& v) {
  Scalar z = Scalar::zero(v.mode());
  return Matrix3{{z, -v[2], v[1]}, {v[2], z, -v[0]}, {-v[1], v[0], z}};
}

template <std::size_t N>
Scalar frobenius_sq(const Mat<N>& m) {
  Scalar s = Scalar::zero(m.mode());
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) s += m(r, c) * m(r, c);
  return s;
}

bool approx_equal(const Scalar& x, const Scalar& y, double tol) {
  double a = x.to_double();
  double b = y.to_double();
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

template <std::size_t N>
bool approx_equal(const Vec<N>& x, const Vec<N>& y, double tol) {
  for (std::size_t i = 0; i < N; ++i)
    if (!approx_equal(x[i], y[i], tol)) return false;
  return true;
}

template <std::size_t N>
bool approx_equal(const Mat<N>& x, const Mat<N>& y, double tol) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (!approx_equal(x(r, c), y(r, c), tol)) return false;
  return true;
}

template <std::size_t N>
std::string to_string(const Vec<N>& v, int precision) {
  std::string out = "[";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ", ";
    out += to_string(v[i], precision);
  }
  return out + "]";
}

template <std::size_t N>
std::string to_string(const Mat<N>& m, int precision) {
  std::string out = "[";
  for (std::size_t r = 0; r < N; ++r) {
    if (r) out += ", ";
    out += to_string(m.row(r), precision);
  }
  return out + "]";
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Vec<N>& v) {
  return os << to_string(v);
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Mat<N>& m) {
  return os << to_string(m);
}

#define VECQ_INSTANTIATE(N)                                                      \
  template class Vec<N>;                                                         \
  template class Mat<N>;                                                         \
  template Scalar dot<N>(const Vec<N>&, const Vec<N>&);                          \
  template Mat<N> operator*<N>(const Mat<N>&, const Mat<N>&);                    \
  template Vec<N> operator*<N>(const Mat<N>&, const Vec<N>&);                    \
  template Mat<N> transpose<N>(const Mat<N>&);                                   \
  template Scalar frobenius_sq<N>(const Mat<N>&);                                \
  template bool approx_equal<N>(const Vec<N>&, const Vec<N>&, double);           \
  template bool approx_equal<N>(const Mat<N>&, const Mat<N>&, double);           \
  template std::string to_string<N>(const Vec<N>&, int);                         \
  template std::string to_string<N>(const Mat<N>&, int);                         \
  template std::ostream& operator<< <N>(std::ostream&, const Vec<N>&);           \
  template std::ostream& operator<< <N>(std::ostream&, const Mat<N>&);

VECQ_INSTANTIATE(2)
VECQ_INSTANTIATE(3)

#undef VECQ_INSTANTIATE

}  // namespace vecq
