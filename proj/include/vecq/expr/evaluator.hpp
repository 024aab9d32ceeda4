#pragma once

#include <string>
#include <string_view>

#include "vecq/errors.hpp"
#include "vecq/expr/syntax.hpp"
#include "vecq/expr/value.hpp"

namespace vecq::expr {

/// Operands of the wrong type or dimension for an operator or built-in.
class TypeError : public SourceError {
public:
  TypeError(std::size_t position, const std::string& message)
      : SourceError(ErrorCategory::Type, position, message) {}
};

/// A vecq::MathError raised while evaluating, tagged with a source position.
class EvalMathError : public SourceError {
public:
  EvalMathError(std::size_t position, const MathError& cause)
      : SourceError(ErrorCategory::Math, position, cause.what()), kind_(cause.kind()) {}

  MathError::Kind kind() const noexcept { return kind_; }

private:
  MathError::Kind kind_;
};

/// Number literals are exact rationals in Exact mode and doubles in Approx
/// mode. Built-ins: inv, det, transpose, dot, cross, norm2, unit, perp, sqrt,
/// and the constants I2, I3, O2, O3.
Value evaluate(const ExprNode& node, Mode mode);

/// parse + evaluate.
Value evaluate(std::string_view source, Mode mode);

}  // namespace vecq::expr
