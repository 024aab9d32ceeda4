#include "vecq/expr/evaluator.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <type_traits>

#include "vecq/quotient.hpp"

namespace vecq::expr {

namespace {

template <class T>
struct shape {
  static constexpr bool is_vec = false;
  static constexpr bool is_mat = false;
  static constexpr std::size_t dim = 0;
};
template <std::size_t N>
struct shape<Vec<N>> {
  static constexpr bool is_vec = true;
  static constexpr bool is_mat = false;
  static constexpr std::size_t dim = N;
};
template <std::size_t N>
struct shape<Mat<N>> {
  static constexpr bool is_vec = false;
  static constexpr bool is_mat = true;
  static constexpr std::size_t dim = N;
};

template <class T>
constexpr bool is_scalar = std::is_same_v<T, Scalar>;
template <class T>
constexpr bool is_vec = shape<T>::is_vec;
template <class T>
constexpr bool is_mat = shape<T>::is_mat;
template <class T>
constexpr std::size_t dim_of = shape<T>::dim;

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Dot: return ".";
    case BinaryOp::Cross: return "x";
  }
  return "?";
}

[[noreturn]] void type_error(std::size_t pos, const std::string& msg) { throw TypeError(pos, msg); }

[[noreturn]] void unsupported(std::size_t pos, BinaryOp op, const Value& a, const Value& b) {
  type_error(pos, "operator '" + std::string(op_symbol(op)) + "' is not defined for " +
                      std::string(type_name(a)) + " and " + std::string(type_name(b)));
}

/// Runs `f`, converting library errors into positioned evaluation errors.
template <class F>
Value guarded(std::size_t pos, F&& f) {
  try {
    return f();
  } catch (const MathError& e) {
    throw EvalMathError(pos, e);
  } catch (const DimensionMismatch& e) {
    throw TypeError(pos, e.what());
  }
}

template <std::size_t N>
Mat<N> matrix_power(const Mat<N>& m, int n) {
  Mat<N> base = n < 0 ? inverse(m) : m;
  Mat<N> out = Mat<N>::identity(m.mode());
  for (int k = n < 0 ? -n : n; k > 0; --k) out = out * base;
  return out;
}

Value binary(BinaryOp op, const Value& lhs, const Value& rhs, std::size_t op_pos) {
  return std::visit(
      [&](const auto& a, const auto& b) -> Value {
        using A = std::decay_t<decltype(a)>;
        using B = std::decay_t<decltype(b)>;
        constexpr bool same_kind = (is_scalar<A> && is_scalar<B>) || (is_vec<A> && is_vec<B>) ||
                                   (is_mat<A> && is_mat<B>);

        // Operands of the same kind but different sizes.
        if constexpr (!is_scalar<A> && !is_scalar<B> && dim_of<A> != dim_of<B>) {
          if (same_kind || (is_mat<A> && is_vec<B> && op == BinaryOp::Mul))
            throw TypeError(op_pos, DimensionMismatch(dim_of<A>, dim_of<B>).what());
          unsupported(op_pos, op, lhs, rhs);
        } else {
          switch (op) {
            case BinaryOp::Add:
            case BinaryOp::Sub:
              if constexpr (std::is_same_v<A, B>) return op == BinaryOp::Add ? Value(a + b) : Value(a - b);
              break;
            case BinaryOp::Mul:
              if constexpr (is_scalar<A>) return a * b;
              else if constexpr (is_scalar<B>) return a * b;
              else if constexpr (is_mat<A>) return a * b;
              else if constexpr (is_vec<A> && is_vec<B>) return multiply(a, b).matrix;
              break;
            case BinaryOp::Div:
              if constexpr (is_scalar<B>) return a / b;
              else if constexpr (is_vec<A> && is_vec<B>) return divide(a, b).matrix;
              break;
            case BinaryOp::Dot:
              if constexpr (is_vec<A> && is_vec<B>) return dot(a, b);
              break;
            case BinaryOp::Cross:
              if constexpr (is_vec<A> && is_vec<B> && dim_of<A> == 3) return cross3(a, b);
              else if constexpr (is_vec<A> && is_vec<B>) return a[0] * b[1] - a[1] * b[0];
              break;
          }
          unsupported(op_pos, op, lhs, rhs);
        }
      },
      lhs, rhs);
}

class Evaluator {
public:
  explicit Evaluator(Mode mode) : mode_(mode) {}

  Value eval(const ExprNode& node) {
    return std::visit([&](const auto& n) { return eval_node(node, n); }, node.node);
  }

private:
  Value eval_node(const ExprNode& node, const NumberLit& n) {
    if (mode_ == Mode::Exact) return Scalar(Rational::parse(n.text));
    errno = 0;
    double v = std::strtod(n.text.c_str(), nullptr);
    return guarded(node.position, [&] { return Value(Scalar::approx(v)); });
  }

  Value eval_node(const ExprNode& node, const VectorLit& lit) {
    std::vector<Value> items;
    for (const auto& e : lit.elements) items.push_back(eval(*e));
    const std::size_t n = items.size();

    bool all_scalars = true;
    for (const auto& v : items) all_scalars = all_scalars && std::holds_alternative<Scalar>(v);
    if (all_scalars) {
      auto s = [&](std::size_t i) { return std::get<Scalar>(items[i]); };
      if (n == 2) return Vector2{s(0), s(1)};
      return Vector3{s(0), s(1), s(2)};
    }

    // A bracket of N row vectors of length N is an N x N matrix.
    if (n == 2 && std::all_of(items.begin(), items.end(), [](const Value& v) { return std::holds_alternative<Vector2>(v); }))
      return Matrix2(Matrix2::Rows{row_array<2>(items[0]), row_array<2>(items[1])});
    if (n == 3 && std::all_of(items.begin(), items.end(), [](const Value& v) { return std::holds_alternative<Vector3>(v); }))
      return Matrix3(Matrix3::Rows{row_array<3>(items[0]), row_array<3>(items[1]), row_array<3>(items[2])});

    for (std::size_t i = 0; i < n; ++i) {
      if (!std::holds_alternative<Scalar>(items[i]) && !std::holds_alternative<Vector2>(items[i]) &&
          !std::holds_alternative<Vector3>(items[i]))
        type_error(lit.elements[i]->position,
                   "vector literal element cannot be a " + std::string(type_name(items[i])));
    }
    type_error(node.position, "vector literal elements must be " + std::to_string(n) + " scalars or " +
                                  std::to_string(n) + " rows of length " + std::to_string(n));
  }

  template <std::size_t N>
  static std::array<Scalar, N> row_array(const Value& v) {
    const auto& vec = std::get<Vec<N>>(v);
    std::array<Scalar, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = vec[i];
    return out;
  }

  Value eval_node(const ExprNode&, const Binary& b) {
    Value lhs = eval(*b.lhs);
    Value rhs = eval(*b.rhs);
    std::size_t math_pos = b.op == BinaryOp::Div ? b.rhs->position : b.op_position;
    try {
      return binary(b.op, lhs, rhs, b.op_position);
    } catch (const MathError& e) {
      throw EvalMathError(math_pos, e);
    }
  }

  Value eval_node(const ExprNode& node, const Unary& u) {
    Value v = eval(*u.operand);
    return guarded(node.position, [&] { return std::visit([](const auto& x) -> Value { return -x; }, v); });
  }

  Value eval_node(const ExprNode& node, const Power& p) {
    Value base = eval(*p.base);
    return guarded(node.position, [&]() -> Value {
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (is_scalar<T>) return pow(x, p.exponent);
            else if constexpr (is_mat<T>) return matrix_power(x, p.exponent);
            else {
              if (p.exponent != -1)
                type_error(node.position, "vectors only support the exponent -1, got " + std::to_string(p.exponent));
              return inverse(x);
            }
          },
          base);
    });
  }

  Value eval_node(const ExprNode& node, const Call& call) {
    const std::string& name = call.name;
    if (name == "I2" || name == "I3" || name == "O2" || name == "O3") {
      if (!call.args.empty()) type_error(node.position, "'" + name + "' is a constant and takes no arguments");
      bool id = name[0] == 'I';
      if (name[1] == '2') return id ? Matrix2::identity(mode_) : Matrix2::zero(mode_);
      return id ? Matrix3::identity(mode_) : Matrix3::zero(mode_);
    }

    struct Builtin {
      const char* name;
      std::size_t arity;
    };
    static constexpr Builtin builtins[] = {{"inv", 1},  {"det", 1},   {"transpose", 1}, {"dot", 2},  {"cross", 2},
                                           {"norm2", 1}, {"unit", 1}, {"perp", 1},      {"sqrt", 1}};
    const Builtin* fn = nullptr;
    for (const auto& b : builtins)
      if (name == b.name) fn = &b;
    if (!fn) {
      if (call.args.empty()) type_error(node.position, "unknown identifier '" + name + "'");
      type_error(node.position, "unknown function '" + name + "'");
    }
    if (call.args.size() != fn->arity) {
      type_error(node.position, "function '" + name + "' expects " + std::to_string(fn->arity) + " argument" +
                                    (fn->arity == 1 ? "" : "s") + ", got " + std::to_string(call.args.size()));
    }

    std::vector<Value> args;
    for (const auto& a : call.args) args.push_back(eval(*a));

    if (fn->arity == 2) {
      BinaryOp op = name == "dot" ? BinaryOp::Dot : BinaryOp::Cross;
      return guarded(node.position, [&] {
        try {
          return binary(op, args[0], args[1], node.position);
        } catch (const TypeError&) {
          type_error(node.position, "function '" + name + "' is not defined for " + std::string(type_name(args[0])) +
                                        " and " + std::string(type_name(args[1])));
        }
      });
    }

    const Value& arg = args[0];
    auto bad_arg = [&]() -> Value {
      type_error(node.position, "function '" + name + "' is not defined for " + std::string(type_name(arg)));
    };
    return guarded(call.args[0]->position, [&]() -> Value {
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if (name == "inv") {
              if constexpr (is_scalar<T>) return Scalar::one(x.mode()) / x;
              else return inverse(x);
            }
            if (name == "det") {
              if constexpr (is_mat<T>) return det(x);
            }
            if (name == "transpose") {
              if constexpr (is_mat<T>) return transpose(x);
            }
            if (name == "norm2") {
              if constexpr (is_vec<T>) return norm_sq(x);
            }
            if (name == "unit") {
              if constexpr (is_vec<T>) return identity_element(x);
            }
            if (name == "perp") {
              if constexpr (std::is_same_v<T, Vector2>) return perp_2d(x);
            }
            if (name == "sqrt") {
              if constexpr (is_scalar<T>) return sqrt_scalar(x);
            }
            return bad_arg();
          },
          arg);
    });
  }

  Mode mode_;
};

}  // namespace

Value evaluate(const ExprNode& node, Mode mode) { return Evaluator(mode).eval(node); }

Value evaluate(std::string_view source, Mode mode) { return evaluate(*parse(source), mode); }

}  // namespace vecq::expr
