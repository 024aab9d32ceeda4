#include "vecq/errors.hpp"

namespace vecq {

const char* describe(MathError::Kind kind) noexcept {
  switch (kind) {
    case MathError::Kind::DivisionByZeroScalar: return "division by zero";
    case MathError::Kind::DivisionByZeroVector: return "division by zero vector";
    case MathError::Kind::ZeroVectorInverse: return "inverse of zero vector";
    case MathError::Kind::NegativeSqrt: return "square root of negative number";
    case MathError::Kind::ParallelVectors: return "vectors are parallel";
    case MathError::Kind::ZeroAxis: return "rotation axis is zero";
    case MathError::Kind::SingularMatrix: return "matrix is singular";
    case MathError::Kind::NonFinite: return "non-finite floating-point value";
  }
  return "math error";
}

void throw_math(MathError::Kind kind) { throw MathError(kind, describe(kind)); }

}  // namespace vecq
