#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "vecq/linalg.hpp"

namespace vecq::expr {

using Value = std::variant<Scalar, Vector2, Vector3, Matrix2, Matrix3>;

/// "scalar", "vector2", "vector3", "matrix2" or "matrix3".
std::string_view type_name(const Value& v);

Mode mode_of(const Value& v);

/// Canonical text form; Approx components use `precision` fractional digits.
std::string to_text(const Value& v, int precision = 12);

/// Compact JSON with keys type, dim (not for scalars), mode and one of
/// value / components / entries. Numbers are emitted as strings.
std::string to_json(const Value& v, int precision = 12);

}  // namespace vecq::expr
