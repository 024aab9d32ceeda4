#include <algorithm>
#include <array>
#include <numeric>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vecq/linalg.hpp"

using namespace vecq;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

// Leibniz expansion over all permutations; independent of the cofactor formulas.
template <std::size_t N>
Scalar leibniz_det(const Mat<N>& m) {
  std::array<std::size_t, N> perm;
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Scalar term = sign;
    for (std::size_t i = 0; i < N; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

template <typename A, typename B>
concept Dottable = requires(A a, B b) { dot(a, b); };

static_assert(Dottable<Vector2, Vector2>);
static_assert(!Dottable<Vector2, Vector3>, "mixing dimensions must not compile");

TEST(Dot, WorkedExamples) {
  EXPECT_EQ(dot(Vector2{3, -1}, Vector2{2, 5}), Scalar(1));
  EXPECT_EQ(dot(Vector3{3, -1, 2}, Vector3{2, 5, 1}), Scalar(3));
  EXPECT_EQ(dot(Vector2{1, 0}, Vector2{0, 1}), Scalar(0));
}

TEST(Cross3, WorkedExampleAndBasis) {
  EXPECT_EQ(cross3(Vector3{3, -1, 2}, Vector3{2, 5, 1}), (Vector3{-11, 1, 17}));
  Vector3 a{3, -1, 2};
  EXPECT_TRUE(cross3(a, a).is_zero());
  EXPECT_EQ(cross3(Vector3{1, 0, 0}, Vector3{0, 1, 0}), (Vector3{0, 0, 1}));
}

TEST(PerpDot, Examples) {
  EXPECT_EQ(perp_dot(Vector2{3, -1}, Vector2{2, 5}), Scalar(-17));
  Vector2 a{3, -1};
  EXPECT_EQ(perp_dot(a, a), Scalar(0));
  // a_y b_x - a_x b_y = 0*0 - 1*1.
  EXPECT_EQ(perp_dot(Vector2{1, 0}, Vector2{0, 1}), Scalar(-1));
}

TEST(NormSq, Examples) {
  EXPECT_EQ(norm_sq(Vector2{2, 5}), Scalar(29));
  EXPECT_EQ(norm_sq(Vector3{2, 5, 1}), Scalar(30));
  EXPECT_EQ(norm_sq(Vector3::zero()), Scalar(0));
}

TEST(MatrixOps, DeterminantOfExampleQuotient) {
  Matrix2 e = Matrix2{{1, 17}, {-17, 1}} * Scalar(q(1, 29));
  EXPECT_EQ(det(e), Scalar(q(10, 29)));
  EXPECT_EQ(leibniz_det(e), Scalar(q(290, 841)));
}

TEST(MatrixOps, TransposeOfIdentity) {
  EXPECT_EQ(transpose(Matrix3::identity()), Matrix3::identity());
  EXPECT_EQ(transpose(Matrix2::identity()), Matrix2::identity());
}

TEST(MatrixOps, ExampleTwoMapsBToA) {
  Matrix3 e = Matrix3{{3, 17, -1}, {-17, 3, -11}, {1, 11, 3}} / Scalar(30);
  EXPECT_EQ((e * Vector3{2, 5, 1}), (Vector3{3, -1, 2}));
}

TEST(MatrixOps, InverseAndSingular) {
  Matrix3 m{{2, 0, 1}, {1, 3, 0}, {0, 1, 4}};
  EXPECT_EQ(m * inverse(m), Matrix3::identity());
  Matrix2 p{{1, 2}, {2, 4}};
  EXPECT_THROW(inverse(p), MathError);
}

TEST(MatrixOps, CrossMatrixActsAsCross) {
  Vector3 v{3, -1, 2}, w{2, 5, 1};
  EXPECT_EQ(cross_matrix(v) * w, cross3(v, w));
}

TEST(MatrixOps, ModeCoercion) {
  Vector2 mixed{Scalar(1), Scalar::approx(0.5)};
  EXPECT_EQ(mixed.mode(), Mode::Approx);
  EXPECT_EQ(mixed[0].mode(), Mode::Approx);
  Matrix2 m = Matrix2::identity() * Scalar::approx(2.0);
  EXPECT_EQ(m(0, 1).mode(), Mode::Approx);
}

TEST(MatrixOps, TextForms) {
  EXPECT_EQ(to_string(Vector2{q(2, 29), q(5, 29)}), "[2/29, 5/29]");
  EXPECT_EQ(to_string(Matrix2{{q(1, 29), q(17, 29)}, {q(-17, 29), q(1, 29)}}),
            "[[1/29, 17/29], [-17/29, 1/29]]");
}

TEST(VectorCoreProperties, DotSymmetricAndBilinear) {
  test_support::RationalGen gen(21);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.vec<3>(), b = gen.vec<3>(), c = gen.vec<3>();
    Scalar k = gen.rational();
    EXPECT_EQ(dot(a, b), dot(b, a));
    EXPECT_EQ(dot(a + c, b), dot(a, b) + dot(c, b));
    EXPECT_EQ(dot(k * a, b), k * dot(a, b));
  }
}

TEST(VectorCoreProperties, CrossProductLaws) {
  test_support::RationalGen gen(22);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.vec<3>(), b = gen.vec<3>();
    Vector3 c = cross3(a, b);
    EXPECT_EQ(c, -cross3(b, a));
    EXPECT_TRUE(dot(c, a).is_zero());
    EXPECT_TRUE(dot(c, b).is_zero());
  }
}

TEST(VectorCoreProperties, PerpDotAntisymmetric) {
  test_support::RationalGen gen(23);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.vec<2>(), b = gen.vec<2>();
    EXPECT_EQ(perp_dot(a, b), -perp_dot(b, a));
  }
}

TEST(VectorCoreProperties, LagrangeIdentity) {
  test_support::RationalGen gen(24);
  for (int i = 0; i < 1000; ++i) {
    auto a3 = gen.vec<3>(), b3 = gen.vec<3>();
    Scalar d3 = dot(a3, b3);
    EXPECT_EQ(d3 * d3 + norm_sq(cross3(a3, b3)), norm_sq(a3) * norm_sq(b3));
    auto a2 = gen.vec<2>(), b2 = gen.vec<2>();
    Scalar d2 = dot(a2, b2), p2 = perp_dot(a2, b2);
    EXPECT_EQ(d2 * d2 + p2 * p2, norm_sq(a2) * norm_sq(b2));
  }
}

TEST(VectorCoreProperties, DeterminantIsMultiplicative) {
  test_support::RationalGen gen(25);
  for (int i = 0; i < 500; ++i) {
    auto m = gen.mat<3>(), n = gen.mat<3>();
    EXPECT_EQ(det(m * n), det(m) * det(n));
    EXPECT_EQ(det(m), leibniz_det(m));
    auto p = gen.mat<2>(), r = gen.mat<2>();
    EXPECT_EQ(det(p * r), det(p) * det(r));
    EXPECT_EQ(det(p), leibniz_det(p));
  }
}
