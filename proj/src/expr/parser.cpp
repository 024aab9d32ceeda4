#include <charconv>
#include <limits>
#include <sstream>

#include "vecq/expr/syntax.hpp"

namespace vecq::expr {

namespace {

std::string expected_message(const std::vector<std::string>& expected) {
  if (expected.size() == 1) return "expected " + expected.front();
  std::string msg = "expected one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  return msg;
}

NodePtr make(std::size_t position, auto&& node) {
  return std::make_unique<ExprNode>(ExprNode{position, std::forward<decltype(node)>(node)});
}

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::End)
      throw std::invalid_argument("token stream must end with End");
  }

  NodePtr parse_all() {
    auto node = expr();
    if (peek().kind != TokenKind::End) throw ParseError(peek().position, "expected operator or end of input");
    return node;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(TokenKind k) const { return peek().kind == k; }

  const Token& expect(TokenKind k, const char* what) {
    if (!at(k)) throw ParseError(peek().position, std::vector<std::string>{what});
    return advance();
  }

  NodePtr expr() {
    auto lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const Token& op = advance();
      auto rhs = term();
      std::size_t start = lhs->position;
      lhs = make(start, Binary{op.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub, std::move(lhs),
                               std::move(rhs), op.position});
    }
    return lhs;
  }

  NodePtr term() {
    auto lhs = factor();
    for (;;) {
      BinaryOp op;
      switch (peek().kind) {
        case TokenKind::Star: op = BinaryOp::Mul; break;
        case TokenKind::Slash: op = BinaryOp::Div; break;
        case TokenKind::Dot: op = BinaryOp::Dot; break;
        case TokenKind::CrossKw: op = BinaryOp::Cross; break;
        default: return lhs;
      }
      std::size_t op_pos = advance().position;
      auto rhs = factor();
      std::size_t start = lhs->position;
      lhs = make(start, Binary{op, std::move(lhs), std::move(rhs), op_pos});
    }
  }

  NodePtr factor() {
    auto base = unary();
    if (!at(TokenKind::Caret)) return base;
    advance();
    bool negative = false;
    if (at(TokenKind::Minus)) {
      negative = true;
      advance();
    }
    const Token& num = peek();
    if (num.kind != TokenKind::Number) throw ParseError(num.position, std::vector<std::string>{"integer exponent"});
    int value = 0;
    auto [end, ec] = std::from_chars(num.lexeme.data(), num.lexeme.data() + num.lexeme.size(), value);
    if (end != num.lexeme.data() + num.lexeme.size()) throw ParseError(num.position, "exponent must be an integer");
    if (ec == std::errc::result_out_of_range) throw ParseError(num.position, "exponent is too large");
    if (value == 0) throw ParseError(num.position, "exponent must be nonzero");
    advance();
    std::size_t start = base->position;
    return make(start, Power{std::move(base), negative ? -value : value});
  }

  NodePtr unary() {
    if (at(TokenKind::Minus)) {
      std::size_t start = advance().position;
      return make(start, Unary{unary()});
    }
    return atom();
  }

  NodePtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number:
        advance();
        return make(tok.position, NumberLit{tok.lexeme});
      case TokenKind::LBracket: {
        advance();
        VectorLit lit;
        lit.elements.push_back(expr());
        while (at(TokenKind::Comma)) {
          const Token& comma = advance();
          if (lit.elements.size() == 3) throw ParseError(comma.position, "vector literal has more than 3 elements");
          lit.elements.push_back(expr());
        }
        if (lit.elements.size() < 2) {
          throw ParseError(peek().position, std::vector<std::string>{"','"});
        }
        expect(TokenKind::RBracket, "']'");
        return make(tok.position, std::move(lit));
      }
      case TokenKind::LParen: {
        advance();
        auto inner = expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Ident: {
        advance();
        Call call{tok.lexeme, {}};
        if (at(TokenKind::LParen)) {
          advance();
          call.args.push_back(expr());
          while (at(TokenKind::Comma)) {
            advance();
            call.args.push_back(expr());
          }
          expect(TokenKind::RParen, "')'");
        }
        return make(tok.position, std::move(call));
      }
      default:
        throw ParseError(tok.position, std::vector<std::string>{"atom"});
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

const char* op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return " + ";
    case BinaryOp::Sub: return " - ";
    case BinaryOp::Mul: return " * ";
    case BinaryOp::Div: return " / ";
    case BinaryOp::Dot: return " . ";
    case BinaryOp::Cross: return " x ";
  }
  return " ? ";
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

void write_source(std::ostream& os, const ExprNode& node) {
  std::visit(overloaded{
                 [&](const NumberLit& n) { os << n.text; },
                 [&](const VectorLit& v) {
                   os << '[';
                   for (std::size_t i = 0; i < v.elements.size(); ++i) {
                     if (i) os << ", ";
                     write_source(os, *v.elements[i]);
                   }
                   os << ']';
                 },
                 [&](const Binary& b) {
                   os << '(';
                   write_source(os, *b.lhs);
                   os << op_text(b.op);
                   write_source(os, *b.rhs);
                   os << ')';
                 },
                 [&](const Unary& u) {
                   os << "(-";
                   write_source(os, *u.operand);
                   os << ')';
                 },
                 [&](const Power& p) {
                   os << '(';
                   write_source(os, *p.base);
                   os << '^' << p.exponent << ')';
                 },
                 [&](const Call& c) {
                   os << c.name;
                   if (c.args.empty()) return;
                   os << '(';
                   for (std::size_t i = 0; i < c.args.size(); ++i) {
                     if (i) os << ", ";
                     write_source(os, *c.args[i]);
                   }
                   os << ')';
                 },
             },
             node.node);
}

bool all_equal(const std::vector<NodePtr>& a, const std::vector<NodePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(*a[i], *b[i])) return false;
  return true;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected)
    : SourceError(ErrorCategory::Parse, position, expected_message(expected)), expected_(std::move(expected)) {}

NodePtr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

NodePtr parse(std::string_view source) { return parse(tokenize(source)); }

std::string to_source(const ExprNode& node) {
  std::ostringstream os;
  write_source(os, node);
  return os.str();
}

bool structurally_equal(const ExprNode& lhs, const ExprNode& rhs) {
  if (lhs.node.index() != rhs.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NumberLit& a) { return a.text == std::get<NumberLit>(rhs.node).text; },
          [&](const VectorLit& a) { return all_equal(a.elements, std::get<VectorLit>(rhs.node).elements); },
          [&](const Binary& a) {
            const auto& b = std::get<Binary>(rhs.node);
            return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
          },
          [&](const Unary& a) { return structurally_equal(*a.operand, *std::get<Unary>(rhs.node).operand); },
          [&](const Power& a) {
            const auto& b = std::get<Power>(rhs.node);
            return a.exponent == b.exponent && structurally_equal(*a.base, *b.base);
          },
          [&](const Call& a) {
            const auto& b = std::get<Call>(rhs.node);
            return a.name == b.name && all_equal(a.args, b.args);
          },
      },
      lhs.node);
}

}  // namespace vecq::expr
