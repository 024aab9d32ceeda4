#include "vecq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "vecq/quotient.hpp"

namespace vecq::oracle {

// ------------------------------------------------------- rotation route

namespace {

template <std::size_t N>
double fdot(const FloatVec<N>& a, const FloatVec<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
void require_nonzero(const FloatVec<N>& a, const FloatVec<N>& b) {
  if (fdot(a, a) == 0.0 || fdot(b, b) == 0.0) throw_math(MathError::Kind::DivisionByZeroVector);
}

}  // namespace

FloatMat<2> divide_by_rotation_route(const FloatVec<2>& a, const FloatVec<2>& b) {
  require_nonzero(a, b);
  // Signed angle that turns b onto a.
  double theta = std::atan2(b[0] * a[1] - b[1] * a[0], fdot(a, b));
  double ratio = std::sqrt(fdot(a, a)) / std::sqrt(fdot(b, b));
  double c = std::cos(theta), s = std::sin(theta);
  return {{{ratio * c, -ratio * s}, {ratio * s, ratio * c}}};
}

FloatMat<3> divide_by_rotation_route(const FloatVec<3>& a, const FloatVec<3>& b) {
  require_nonzero(a, b);
  FloatVec<3> axis{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  double len = std::sqrt(fdot(axis, axis));
  if (len == 0.0) throw_math(MathError::Kind::ParallelVectors);
  for (double& x : axis) x /= len;
  const auto [A, B, C] = axis;

  double theta = std::atan2(len, fdot(a, b));
  double ratio = std::sqrt(fdot(a, a)) / std::sqrt(fdot(b, b));
  double c = ratio * std::cos(theta), s = ratio * std::sin(theta);
  return {{{c, C * s, -B * s}, {-C * s, c, A * s}, {B * s, -A * s, c}}};
}

// ---------------------------------------------------------- trial inputs

namespace {

constexpr double kRouteTolerance = 1e-9;
constexpr double kFloatLawTolerance = 1e-9;

// SplitMix64; each trial gets its own stream so trials are order independent.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::size_t index, std::size_t dim)
      : state_(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)) ^ (dim << 56)) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Numerator in [-20, 20], denominator in [1, 9].
  Rational rational() {
    auto num = static_cast<std::int64_t>(next() % 41) - 20;
    auto den = static_cast<std::int64_t>(next() % 9) + 1;
    return Rational(BigInt(num), BigInt(den));
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  template <std::size_t N>
  Vec<N> vec() {
    std::array<Scalar, N> c;
    for (auto& x : c) x = rational();
    return Vec<N>(c);
  }

  template <std::size_t N>
  Vec<N> nonzero_vec() {
    for (;;) {
      Vec<N> v = vec<N>();
      if (!v.is_zero()) return v;
    }
  }

private:
  std::uint64_t state_;
};

template <std::size_t N>
struct Trial {
  Vec<N> a;
  Vec<N> b;  // never zero
  Vec<N> c;  // never zero
  Scalar k;
};

template <std::size_t N>
struct Worked;

template <>
struct Worked<2> {
  static Vector2 a() { return {3, -1}; }
  static Vector2 b() { return {2, 5}; }
  static Vector2 square_norm() { return {3, 4}; }
};

template <>
struct Worked<3> {
  static Vector3 a() { return {3, -1, 2}; }
  static Vector3 b() { return {2, 5, 1}; }
  static Vector3 square_norm() { return {2, 3, 6}; }
};

template <std::size_t N>
bool degenerate_pair(const Vec<N>& a, const Vec<N>& b) {
  if (a.is_zero()) return true;
  if constexpr (N == 3) return cross3(a, b).is_zero();
  return false;
}

template <std::size_t N>
Trial<N> make_trial(std::uint64_t seed, std::size_t index, bool nondegenerate) {
  TrialRng rng(seed, index, N);
  Trial<N> t{rng.vec<N>(), rng.nonzero_vec<N>(), rng.nonzero_vec<N>(), rng.rational()};
  switch (index) {
    case 0:
      t.a = Worked<N>::a();
      t.b = Worked<N>::b();
      break;
    case 1: t.a = Vec<N>::zero(); break;
    case 2: t.a = t.b * Scalar(rng.nonzero_rational()); break;
    case 3: t.a = t.b; break;
    case 4: t.a = Worked<N>::square_norm() * Scalar(rng.nonzero_rational()); break;
    case 5: t.k = Scalar(0); break;
    default: break;
  }
  if (nondegenerate) {
    while (degenerate_pair(t.a, t.b)) t.a = rng.nonzero_vec<N>();
  }
  return t;
}

// ------------------------------------------------------------ law checks

struct CheckResult {
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

template <typename T>
CheckResult same(const T& lhs, const T& rhs) {
  return {lhs == rhs, to_string(lhs), to_string(rhs)};
}

template <typename T>
CheckResult close(const T& lhs, const T& rhs, double tol) {
  return {approx_equal(lhs, rhs, tol), to_string(lhs), to_string(rhs)};
}

template <typename Fn>
CheckResult expect_error(MathError::Kind kind, Fn&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return {e.kind() == kind, std::string("error: ") + e.what(), std::string("error: ") + describe(kind)};
  }
  return {false, "no error", std::string("error: ") + describe(kind)};
}

CheckResult all_of(std::initializer_list<CheckResult> parts) {
  CheckResult out{true, "", ""};
  for (const auto& p : parts) {
    out.ok = out.ok && p.ok;
    out.lhs += (out.lhs.empty() ? "" : "; ") + p.lhs;
    out.rhs += (out.rhs.empty() ? "" : "; ") + p.rhs;
  }
  return out;
}

template <std::size_t N>
CheckResult reconstruction(const Trial<N>& t) {
  return same(divide(t.a, t.b).matrix * t.b, t.a);
}

template <std::size_t N>
CheckResult consistency(const Trial<N>& t) {
  return same(divide(t.a, t.b).matrix, multiply(t.a, inverse(t.b)).matrix);
}

template <std::size_t N>
CheckResult scaling_link(const Trial<N>& t) {
  return same(multiply(t.a, t.b).matrix, norm_sq(t.b) * divide(t.a, t.b).matrix);
}

template <std::size_t N>
CheckResult d1_self_quotient(const Trial<N>& t) {
  if (t.a.is_zero())
    return expect_error(MathError::Kind::DivisionByZeroVector, [&] { divide(t.a, t.a); });
  return same(divide(t.a, t.a).matrix, Mat<N>::identity());
}

template <std::size_t N>
CheckResult d2_zero_numerator(const Trial<N>& t) {
  return same(divide(Vec<N>::zero(), t.b).matrix, Mat<N>::zero());
}

CheckResult d3_full(const Trial<2>& t) {
  if (t.a.is_zero())
    return expect_error(MathError::Kind::DivisionByZeroVector, [&] { divide(t.b, t.a); });
  return same(divide(t.a, t.b).matrix * divide(t.b, t.a).matrix, Matrix2::identity());
}

CheckResult d3_full_strict(const Trial<3>& t) {
  if (t.a.is_zero())
    return expect_error(MathError::Kind::DivisionByZeroVector, [&] { divide(t.b, t.a); });
  return same(divide(t.a, t.b).matrix * divide(t.b, t.a).matrix, Matrix3::identity());
}

// The product of the two quotients fixes span{a, b} and scales a x b by cos^2.
CheckResult d3_restricted(const Trial<3>& t) {
  if (t.a.is_zero())
    return expect_error(MathError::Kind::DivisionByZeroVector, [&] { divide(t.b, t.a); });
  Matrix3 p = divide(t.a, t.b).matrix * divide(t.b, t.a).matrix;
  Vector3 w = cross3(t.a, t.b);
  Scalar d = dot(t.a, t.b);
  Scalar cos_sq = d * d / (norm_sq(t.a) * norm_sq(t.b));
  return all_of({same(p * t.a, t.a), same(p * t.b, t.b), same(p * w, cos_sq * w)});
}

template <std::size_t N>
CheckResult d4_distributive(const Trial<N>& t) {
  return same(divide(t.a + t.b, t.c).matrix, divide(t.a, t.c).matrix + divide(t.b, t.c).matrix);
}

template <std::size_t N>
CheckResult m1_inverse(const Trial<N>& t) {
  if (t.a.is_zero()) return expect_error(MathError::Kind::ZeroVectorInverse, [&] { inverse(t.a); });
  return same(multiply(t.a, inverse(t.a)).matrix, Mat<N>::identity());
}

template <std::size_t N>
CheckResult m2_transpose(const Trial<N>& t) {
  auto ab = multiply(t.a, t.b);
  auto ba = multiply(t.b, t.a);
  return all_of({same(ba.matrix, transpose(ab.matrix)), same(ba.alpha, ab.alpha)});
}

template <std::size_t N>
CheckResult m2_strict(const Trial<N>& t) {
  return same(multiply(t.a, t.b).matrix, multiply(t.b, t.a).matrix);
}

template <std::size_t N>
CheckResult m3_identity_element(const Trial<N>& t) {
  if (t.a.is_zero())
    return expect_error(MathError::Kind::ZeroVectorInverse, [&] { identity_element(t.a); });
  Vec<N> u = identity_element(t.a);
  Mat<N> expected = Mat<N>::identity() * sqrt_scalar(norm_sq(t.a));
  Mat<N> au = multiply(t.a, u).matrix;
  Mat<N> ua = multiply(u, t.a).matrix;
  if (u.mode() == Mode::Exact) return all_of({same(au, expected), same(ua, expected)});
  return all_of({close(au, expected, kFloatLawTolerance), close(ua, expected, kFloatLawTolerance)});
}

template <std::size_t N>
CheckResult m4_distributive(const Trial<N>& t) {
  return same(multiply(t.a, t.b + t.c).matrix, multiply(t.a, t.b).matrix + multiply(t.a, t.c).matrix);
}

template <std::size_t N>
CheckResult m5_scalar_linear(const Trial<N>& t) {
  return same(multiply(t.a, t.k * t.b).matrix, t.k * multiply(t.a, t.b).matrix);
}

// a (x) b is zero iff a or b is. For nonzero operands the squared entries sum
// to at least 2 |a|^2 |b|^2 (equality in 2D).
template <std::size_t N>
CheckResult m6_zero_divisors(const Trial<N>& t) {
  Mat<N> m = multiply(t.a, t.b).matrix;
  CheckResult zero_operands = all_of({same(multiply(t.a, Vec<N>::zero()).matrix, Mat<N>::zero()),
                                      same(multiply(Vec<N>::zero(), t.b).matrix, Mat<N>::zero())});
  if (t.a.is_zero()) return all_of({same(m, Mat<N>::zero()), zero_operands});
  Scalar energy = frobenius_sq(m);
  Scalar bound = Scalar(2) * norm_sq(t.a) * norm_sq(t.b);
  CheckResult nonzero{!m.is_zero() && energy >= bound && bound.sign() > 0,
                      "frobenius^2=" + to_string(energy), ">= " + to_string(bound)};
  return all_of({nonzero, zero_operands});
}

CheckResult det_law(const Trial<2>& t) {
  return same(det(divide(t.a, t.b).matrix) * norm_sq(t.b), norm_sq(t.a));
}

CheckResult det_law(const Trial<3>& t) {
  Scalar b2 = norm_sq(t.b);
  Scalar d = dot(t.a, t.b);
  return same(det(divide(t.a, t.b).matrix) * b2 * b2 * b2, d * (d * d + norm_sq(cross3(t.a, t.b))));
}

// Read (a.b) and the skew coefficients back off the product matrix.
CheckResult lagrange(const Trial<2>& t) {
  Matrix2 m = multiply(t.a, t.b).matrix;
  const Scalar& p = m(0, 0);
  const Scalar& q = m(1, 0);
  Scalar d = dot(t.a, t.b), pd = perp_dot(t.a, t.b);
  return all_of({same(p * p + q * q, norm_sq(t.a) * norm_sq(t.b)),
                 same(d * d + pd * pd, norm_sq(t.a) * norm_sq(t.b))});
}

CheckResult lagrange(const Trial<3>& t) {
  Matrix3 m = multiply(t.a, t.b).matrix;
  const Scalar& p = m(0, 0);
  Scalar skew = m(1, 2) * m(1, 2) + m(2, 0) * m(2, 0) + m(0, 1) * m(0, 1);
  Scalar d = dot(t.a, t.b);
  return all_of({same(p * p + skew, norm_sq(t.a) * norm_sq(t.b)),
                 same(d * d + norm_sq(cross3(t.a, t.b)), norm_sq(t.a) * norm_sq(t.b))});
}

CheckResult orientation(const Trial<2>& t) {
  return same(divide(t.a, t.b, Orientation::Ccw).matrix, divide(t.a, t.b, Orientation::Cw).matrix);
}

CheckResult orientation(const Trial<3>& t) {
  return same(divide(t.a, t.b, AxisSense::Positive).matrix, divide(t.a, t.b, AxisSense::Negative).matrix);
}

template <std::size_t N>
Mat<N> from_float(const FloatMat<N>& m) {
  typename Mat<N>::Rows rows;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) rows[r][c] = Scalar::approx(m[r][c]);
  return Mat<N>(rows);
}

template <std::size_t N>
CheckResult route_agreement(const Trial<N>& t) {
  Mat<N> exact = divide(t.a, t.b).matrix;
  Mat<N> route = from_float<N>(divide_by_rotation_route(to_float(t.a), to_float(t.b)));
  return {approx_equal(exact, route, kRouteTolerance), to_string(exact), to_string(route)};
}

// ------------------------------------------------------------ registry

struct LawDef {
  LawInfo info;
  std::string inputs;  // which of a, b, c, k the law reads
  bool nondegenerate = false;
  std::function<CheckResult(const Trial<2>&)> check2;
  std::function<CheckResult(const Trial<3>&)> check3;
};

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = [] {
    std::vector<LawDef> t;
    auto add2 = [&](std::string name, Expectation e, std::string summary, std::string inputs,
                    std::function<CheckResult(const Trial<2>&)> fn, bool nondegenerate = false) {
      t.push_back({{std::move(name) + "-2d", e, std::move(summary)}, std::move(inputs), nondegenerate,
                   std::move(fn), nullptr});
    };
    auto add3 = [&](std::string name, Expectation e, std::string summary, std::string inputs,
                    std::function<CheckResult(const Trial<3>&)> fn, bool nondegenerate = false) {
      t.push_back({{std::move(name) + "-3d", e, std::move(summary)}, std::move(inputs), nondegenerate,
                   nullptr, std::move(fn)});
    };
    auto both = [&](const std::string& name, Expectation e, const std::string& summary,
                    const std::string& inputs, auto fn2, auto fn3, bool nondegenerate = false) {
      add2(name, e, summary, inputs, fn2, nondegenerate);
      add3(name, e, summary, inputs, fn3, nondegenerate);
    };
    const auto holds = Expectation::Holds;
    const auto fails = Expectation::ExpectedToFail;

    both("reconstruction", holds, "(a/b) b = a", "ab", reconstruction<2>, reconstruction<3>);
    both("consistency", holds, "a/b = a (x) inverse(b)", "ab", consistency<2>, consistency<3>);
    both("scaling-link", holds, "a (x) b = |b|^2 (a/b)", "ab", scaling_link<2>, scaling_link<3>);
    both("D1", holds, "a/a = I", "a", d1_self_quotient<2>, d1_self_quotient<3>);
    both("D2", holds, "0/b = O", "b", d2_zero_numerator<2>, d2_zero_numerator<3>);
    add2("D3", holds, "(a/b)(b/a) = I", "ab", [](const Trial<2>& t) { return d3_full(t); });
    add3("D3-restricted", holds, "(a/b)(b/a) fixes a and b; scales a x b by cos^2", "ab",
         [](const Trial<3>& t) { return d3_restricted(t); });
    add3("D3-strict", fails, "(a/b)(b/a) = I as a full 3x3 identity", "ab",
         [](const Trial<3>& t) { return d3_full_strict(t); });
    both("D4", holds, "(a+b)/c = a/c + b/c", "abc", d4_distributive<2>, d4_distributive<3>);
    both("M1", holds, "a (x) inverse(a) = I", "a", m1_inverse<2>, m1_inverse<3>);
    both("M2-transpose", holds, "b (x) a = (a (x) b)^T", "ab", m2_transpose<2>, m2_transpose<3>);
    both("M2-strict", fails, "a (x) b = b (x) a", "ab", m2_strict<2>, m2_strict<3>);
    both("M3", holds, "a (x) u = u (x) a = |a| I for u = a/|a|", "a", m3_identity_element<2>,
         m3_identity_element<3>);
    both("M4", holds, "a (x) (b+c) = a (x) b + a (x) c", "abc", m4_distributive<2>, m4_distributive<3>);
    both("M5", holds, "a (x) (k b) = k (a (x) b)", "abk", m5_scalar_linear<2>, m5_scalar_linear<3>);
    both("M6", holds, "a (x) b = O iff a = 0 or b = 0", "ab", m6_zero_divisors<2>, m6_zero_divisors<3>);
    both("det", holds, "det(a/b) cleared of radicals", "ab",
         [](const Trial<2>& t) { return det_law(t); }, [](const Trial<3>& t) { return det_law(t); });
    both("lagrange", holds, "(a.b)^2 + |a x b|^2 = |a|^2 |b|^2", "ab",
         [](const Trial<2>& t) { return lagrange(t); }, [](const Trial<3>& t) { return lagrange(t); });
    both("orientation", holds, "a/b independent of the perpendicular choice", "ab",
         [](const Trial<2>& t) { return orientation(t); }, [](const Trial<3>& t) { return orientation(t); });
    both("route-agreement", holds, "exact a/b matches the float rotation route within 1e-9", "ab",
         route_agreement<2>, route_agreement<3>, true);
    return t;
  }();
  return table;
}

const LawDef& find_law(std::string_view name) {
  const auto& table = law_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const LawDef& d) { return d.info.name == name; });
  if (it == table.end()) throw UnknownLaw(name);
  return *it;
}

template <std::size_t N>
std::vector<std::pair<std::string, std::string>> describe_inputs(const Trial<N>& t, const std::string& used) {
  std::vector<std::pair<std::string, std::string>> out;
  for (char name : used) {
    switch (name) {
      case 'a': out.emplace_back("a", to_string(t.a)); break;
      case 'b': out.emplace_back("b", to_string(t.b)); break;
      case 'c': out.emplace_back("c", to_string(t.c)); break;
      case 'k': out.emplace_back("k", to_string(t.k)); break;
      default: break;
    }
  }
  return out;
}

template <std::size_t N>
OracleReport run(const LawDef& law, const std::function<CheckResult(const Trial<N>&)>& check,
                 std::uint64_t seed, std::size_t trials) {
  OracleReport report{law.info.name, trials, 0, std::nullopt};
  for (std::size_t i = 0; i < trials; ++i) {
    Trial<N> t = make_trial<N>(seed, i, law.nondegenerate);
    CheckResult r;
    try {
      r = check(t);
    } catch (const std::exception& e) {
      r = {false, std::string("unexpected error: ") + e.what(), "no error"};
    }
    if (r.ok) continue;
    ++report.failures;
    if (!report.first_counterexample)
      report.first_counterexample = Counterexample{i, describe_inputs(t, law.inputs), r.lhs, r.rhs};
  }
  return report;
}

}  // namespace

const std::vector<LawInfo>& registered_laws() {
  static const std::vector<LawInfo> laws = [] {
    std::vector<LawInfo> out;
    for (const auto& d : law_table()) out.push_back(d.info);
    return out;
  }();
  return laws;
}

const LawInfo& law_info(std::string_view name) { return find_law(name).info; }

OracleReport brute_force_law_check(std::string_view law, std::uint64_t seed, std::size_t trials) {
  const LawDef& def = find_law(law);
  if (def.check2) return run<2>(def, def.check2, seed, trials);
  return run<3>(def, def.check3, seed, trials);
}

bool status_as_expected(const OracleReport& report, Expectation expectation) {
  return expectation == Expectation::Holds ? report.failures == 0 : report.failures > 0;
}

std::string to_text(const OracleReport& report) {
  std::ostringstream os;
  os << "LAW " << report.law_name << " trials=" << report.trials << " failures=" << report.failures << '\n';
  if (const auto& cx = report.first_counterexample) {
    os << "  counterexample trial=" << cx->trial;
    for (const auto& [name, value] : cx->inputs) os << ' ' << name << '=' << value;
    os << '\n';
    os << "    lhs: " << cx->lhs << '\n';
    os << "    rhs: " << cx->rhs << '\n';
  }
  return os.str();
}

}  // namespace vecq::oracle
