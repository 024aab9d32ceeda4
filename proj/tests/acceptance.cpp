// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "golden_cases.hpp"
#include "process.hpp"
#include "test_support.hpp"
#include "vecq/expr/syntax.hpp"
#include "vecq/oracle.hpp"
#include "vecq/quotient.hpp"

using namespace vecq;

namespace {

constexpr std::size_t kTrials = 1024;
constexpr std::uint64_t kSeed = 20240601;

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

// Collects the failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

void laws_hold(Check& c, std::initializer_list<const char*> laws, std::size_t trials = kTrials) {
  for (const char* law : laws) {
    auto report = oracle::brute_force_law_check(law, kSeed, trials);
    c.expect(report.trials == trials && report.failures == 0,
             std::string(law) + ": " + std::to_string(report.failures) + " failures");
  }
}

template <std::size_t N>
Mat<N> scaled(const Mat<N>& m, std::int64_t denominator) {
  return m / Scalar(denominator);
}

// Leibniz expansion over the permutations, written out independently of det().
Scalar leibniz(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
Scalar leibniz(const Matrix3& m) {
  return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) + m(0, 2) * m(1, 0) * m(2, 1) -
         m(0, 2) * m(1, 1) * m(2, 0) - m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
}

const Vector2 kA2{3, -1};
const Vector2 kB2{2, 5};
const Vector3 kA3{3, -1, 2};
const Vector3 kB3{2, 5, 1};

Check criterion_1() {
  Check c;
  auto e = divide(kA2, kB2).matrix;
  c.expect(e == scaled(Matrix2{{1, 17}, {-17, 1}}, 29), "E = (1/29)[[1,17],[-17,1]]");
  c.expect(e * kB2 == kA2, "E b = a");
  c.expect(e.mode() == Mode::Exact, "exact mode");
  return c;
}

Check criterion_2() {
  Check c;
  auto e = divide(kA3, kB3).matrix;
  c.expect(e == scaled(Matrix3{{3, 17, -1}, {-17, 3, -11}, {1, 11, 3}}, 30), "E = (1/30)[...]");
  c.expect(e * kB3 == kA3, "E b = a");
  c.expect(e.mode() == Mode::Exact, "exact mode");
  return c;
}

Check criterion_3() {
  Check c;
  c.expect(multiply(kA2, kB2).matrix == Matrix2{{1, 17}, {-17, 1}}, "2D product");
  c.expect(multiply(kA3, kB3).matrix == Matrix3{{3, 17, -1}, {-17, 3, -11}, {1, 11, 3}}, "3D product");
  c.expect(inverse(kB2) == Vector2{q(2, 29), q(5, 29)}, "inverse (2,5)");
  c.expect(inverse(kB3) == Vector3{q(1, 15), q(1, 6), q(1, 30)}, "inverse (2,5,1)");
  return c;
}

Check criterion_4() {
  Check c;
  laws_hold(c, {"reconstruction-2d", "reconstruction-3d"});
  return c;
}

Check criterion_5() {
  Check c;
  laws_hold(c, {"consistency-2d", "consistency-3d"});
  return c;
}

Check criterion_6() {
  Check c;
  laws_hold(c, {"det-2d", "det-3d"});
  auto e1 = divide(kA2, kB2).matrix;
  auto e2 = divide(kA3, kB3).matrix;
  c.expect(det(e1) == Scalar(q(10, 29)) && leibniz(e1) == Scalar(q(10, 29)), "example 1 det = 10/29");
  c.expect(det(e2) == Scalar(q(7, 150)) && leibniz(e2) == Scalar(q(7, 150)), "example 2 det = 7/150");
  return c;
}

Check criterion_7() {
  Check c;
  laws_hold(c, {"D1-2d", "D1-3d", "D2-2d", "D2-3d", "D4-2d", "D4-3d", "D3-2d", "D3-restricted-3d"});
  // the full 3x3 identity does not hold off the plane of a and b
  auto strict = oracle::brute_force_law_check("D3-strict-3d", kSeed, kTrials);
  c.expect(strict.failures > 0, "D3-strict-3d should have counterexamples");

  auto p = divide(kA3, kB3).matrix * divide(kB3, kA3).matrix;
  Vector3 w = cross3(kA3, kB3);
  Scalar ab = dot(kA3, kB3);
  Scalar factor = ab * ab / (norm_sq(kA3) * norm_sq(kB3));
  c.expect(p * kA3 == kA3 && p * kB3 == kB3, "product fixes a and b");
  c.expect(p * w == factor * w, "off-plane factor cos^2 on a x b");
  c.expect(factor == Scalar(q(3, 140)), "cos^2 = 3/140 for the example pair");
  return c;
}

Check criterion_8() {
  Check c;
  laws_hold(c, {"M1-2d", "M1-3d", "M3-2d", "M3-3d", "M4-2d", "M4-3d", "M5-2d", "M5-3d", "M6-2d", "M6-3d",
                "M2-transpose-2d", "M2-transpose-3d"});
  for (const char* law : {"M2-strict-2d", "M2-strict-3d"}) {
    auto r = oracle::brute_force_law_check(law, kSeed, kTrials);
    c.expect(r.failures > 0 && r.first_counterexample && r.first_counterexample->trial == 0,
             std::string(law) + " should fail first on the example pair");
  }
  auto r2 = oracle::brute_force_law_check("M2-strict-2d", kSeed, kTrials);
  if (r2.first_counterexample) {
    const auto& in = r2.first_counterexample->inputs;
    c.expect(in.size() == 2 && in[0].second == "[3, -1]" && in[1].second == "[2, 5]",
             "pinned counterexample ((3,-1),(2,5))");
  }
  // a perfect-square norm keeps the identity element exact
  Vector2 v{3, 4};
  auto u = identity_element(v);
  c.expect(u.mode() == Mode::Exact && multiply(v, u).matrix == Matrix2::identity() * Scalar(5),
           "exact M3 on (3,4)");
  return c;
}

Check criterion_9() {
  Check c;
  laws_hold(c, {"lagrange-2d", "lagrange-3d"});
  return c;
}

Check criterion_10() {
  Check c;
  laws_hold(c, {"orientation-2d", "orientation-3d"});
  return c;
}

template <std::size_t N>
double worst_route_gap(test_support::RationalGen& gen, std::size_t pairs) {
  double worst = 0.0;
  for (std::size_t done = 0; done < pairs;) {
    Vec<N> a = gen.nonzero_vec<N>();
    Vec<N> b = gen.nonzero_vec<N>();
    if constexpr (N == 3) {
      if (cross3(a, b).is_zero()) continue;
    }
    auto exact = divide(a, b).matrix;
    auto route = oracle::divide_by_rotation_route(oracle::to_float(a), oracle::to_float(b));
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) worst = std::max(worst, std::abs(exact(r, k).to_double() - route[r][k]));
    ++done;
  }
  return worst;
}

Check criterion_11() {
  Check c;
  laws_hold(c, {"route-agreement-2d", "route-agreement-3d"}, 1000);
  test_support::RationalGen gen(kSeed);
  double gap2 = worst_route_gap<2>(gen, 1000);
  double gap3 = worst_route_gap<3>(gen, 1000);
  c.expect(gap2 <= 1e-9, "2D worst entry gap " + std::to_string(gap2));
  c.expect(gap3 <= 1e-9, "3D worst entry gap " + std::to_string(gap3));
  std::ostringstream note;
  note << "worst absolute entry gap 2D " << gap2 << ", 3D " << gap3;
  c.note = note.str();
  return c;
}

Check criterion_12() {
  Check c;
  auto cases = test_support::load_golden();
  std::set<int> codes;
  std::set<std::string> error_classes;
  std::set<expr::TokenKind> operators;
  bool json = false, float_mode = false, exact_mode = false, unary_minus = false;
  std::size_t mismatches = 0;

  for (const auto& g : cases) {
    std::vector<std::string> argv{VECQ_BINARY, "eval"};
    argv.insert(argv.end(), g.flags.begin(), g.flags.end());
    argv.push_back(g.expr);
    auto r = test_support::run_process(argv);

    std::string got;
    if (r.exit_code == 0) {
      got = r.out;
    } else {
      got = "!" + std::to_string(r.exit_code) + " " + r.err.substr(0, r.err.find('\n')) + "\n";
      if (!r.out.empty()) got += "<unexpected stdout>";
    }
    if (got != g.expected + "\n") {
      ++mismatches;
      c.failures.push_back("line " + std::to_string(g.line) + ": " + g.expr);
    }

    codes.insert(g.expected_code());
    if (g.is_error()) error_classes.insert(g.expected.substr(3, g.expected.find(' ', 3) - 3));
    json = json || (g.has_flag("--json") && !g.is_error());
    (g.float_mode() ? float_mode : exact_mode) = true;
    if (g.is_error()) continue;
    auto tokens = expr::tokenize(g.expr);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto k = tokens[i].kind;
      bool starts_operand = i == 0 || tokens[i - 1].kind == expr::TokenKind::LParen ||
                            tokens[i - 1].kind == expr::TokenKind::LBracket ||
                            tokens[i - 1].kind == expr::TokenKind::Comma;
      if (k == expr::TokenKind::Minus && starts_operand) unary_minus = true;
      else operators.insert(k);
    }
  }

  using K = expr::TokenKind;
  c.expect(cases.size() >= 25, "at least 25 expressions");
  for (int code : {0, 2, 3, 4}) c.expect(codes.count(code), "exit code " + std::to_string(code) + " covered");
  for (const char* cls : {"lex", "parse", "type", "math"}) c.expect(error_classes.count(cls), std::string(cls) + " error covered");
  for (auto k : {K::Plus, K::Minus, K::Star, K::Slash, K::Dot, K::CrossKw, K::Caret})
    c.expect(operators.count(k), "operator kind " + std::to_string(static_cast<int>(k)) + " covered");
  c.expect(unary_minus, "unary minus covered");
  c.expect(json, "JSON output covered");
  c.expect(float_mode && exact_mode, "both modes covered");
  c.note = std::to_string(cases.size()) + " expressions, " + std::to_string(mismatches) + " mismatches";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"example 1: 2D quotient and reconstruction", criterion_1},
      {"example 2: 3D quotient and reconstruction", criterion_2},
      {"examples 3-4: products and inverse vectors", criterion_3},
      {"reconstruction law", criterion_4},
      {"consistency law", criterion_5},
      {"determinant identities", criterion_6},
      {"division properties D1-D4", criterion_7},
      {"multiplication properties M1-M6", criterion_8},
      {"Lagrange identity", criterion_9},
      {"orientation invariance", criterion_10},
      {"rotation route agreement", criterion_11},
      {"golden expressions through the CLI", criterion_12},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first;
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << '\n';
    for (const auto& f : c.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
