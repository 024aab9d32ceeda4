#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vecq {

/// Failure of a mathematical precondition (zero divisors, negative roots, ...).
class MathError : public std::runtime_error {
public:
  enum class Kind {
    DivisionByZeroScalar,
    DivisionByZeroVector,
    ZeroVectorInverse,
    NegativeSqrt,
    ParallelVectors,
    ZeroAxis,
    SingularMatrix,
    NonFinite,
  };

  MathError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Raised when two operands have different dimensions.
class DimensionMismatch : public std::runtime_error {
public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::runtime_error("dimension mismatch: " + std::to_string(lhs) + " vs " +
                           std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

private:
  std::size_t lhs_;
  std::size_t rhs_;
};

[[noreturn]] void throw_math(MathError::Kind kind);

/// Short human-readable message for a math error kind, e.g. "division by zero vector".
const char* describe(MathError::Kind kind) noexcept;

}  // namespace vecq
