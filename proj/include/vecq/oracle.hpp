#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vecq/linalg.hpp"

// Independent verification of the quotient algebra.
//
// The rotation route rebuilds a / b from magnitudes and the angle between the
// vectors using plain doubles; it shares no code with the exact closed form.
// The law checker evaluates each algebraic law on seeded rational inputs.

namespace vecq::oracle {

template <std::size_t N>
using FloatVec = std::array<double, N>;

template <std::size_t N>
using FloatMat = std::array<std::array<double, N>, N>;

/// 2D: |a|/|b| times the rotation by the signed angle from b to a.
/// Throws MathError(DivisionByZeroVector) when a or b is zero.
FloatMat<2> divide_by_rotation_route(const FloatVec<2>& a, const FloatVec<2>& b);

/// 3D: |a|/|b| (cos t I + sin t R(n)) with n = a x b / |a x b| normalized
/// explicitly. Throws DivisionByZeroVector or ParallelVectors.
FloatMat<3> divide_by_rotation_route(const FloatVec<3>& a, const FloatVec<3>& b);

template <std::size_t N>
FloatVec<N> to_float(const Vec<N>& v) {
  FloatVec<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i].to_double();
  return out;
}

class UnknownLaw : public std::invalid_argument {
public:
  explicit UnknownLaw(std::string_view name)
      : std::invalid_argument("unknown law: " + std::string(name)) {}
};

enum class Expectation { Holds, ExpectedToFail };

struct LawInfo {
  std::string name;
  Expectation expectation;
  std::string summary;
};

struct Counterexample {
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  ///< (name, canonical text)
  std::string lhs;
  std::string rhs;
};

struct OracleReport {
  std::string law_name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first_counterexample;  ///< lowest failing trial index
};

/// Every registered law, in reporting order.
const std::vector<LawInfo>& registered_laws();

/// Throws UnknownLaw.
const LawInfo& law_info(std::string_view name);

/// Evaluates `law` on `trials` generated inputs. Deterministic in (seed, trials).
/// Trial 0 is the worked example pair, trials 1..5 inject a zero numerator, a
/// parallel pair, an equal pair, a perfect-square norm and a zero scale factor.
OracleReport brute_force_law_check(std::string_view law, std::uint64_t seed, std::size_t trials);

/// True when the report matches the law's expectation: zero failures for a
/// law that holds, at least one counterexample for an expected failure.
bool status_as_expected(const OracleReport& report, Expectation expectation);

/// "LAW <name> trials=<n> failures=<k>" plus counterexample lines when k > 0.
std::string to_text(const OracleReport& report);

}  // namespace vecq::oracle
