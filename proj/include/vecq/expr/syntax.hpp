#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vecq::expr {

enum class ErrorCategory { Lex, Parse, Type, Math };

/// Any error tied to a byte offset in the source text.
class SourceError : public std::runtime_error {
public:
  SourceError(ErrorCategory category, std::size_t position, const std::string& message)
      : std::runtime_error(message), category_(category), position_(position) {}

  ErrorCategory category() const noexcept { return category_; }
  std::size_t position() const noexcept { return position_; }

private:
  ErrorCategory category_;
  std::size_t position_;
};

class LexError : public SourceError {
public:
  LexError(std::size_t position, std::string character)
      : SourceError(ErrorCategory::Lex, position, "unexpected character '" + character + "'"),
        character_(std::move(character)) {}

  const std::string& character() const noexcept { return character_; }

private:
  std::string character_;
};

class ParseError : public SourceError {
public:
  ParseError(std::size_t position, std::vector<std::string> expected);
  ParseError(std::size_t position, const std::string& message)
      : SourceError(ErrorCategory::Parse, position, message) {}

  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::vector<std::string> expected_;
};

// ---------------------------------------------------------------- tokens

enum class TokenKind {
  Number,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  Dot,
  CrossKw,
  Caret,
  Ident,
  End,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits `source` into tokens terminated by a single End token. Numbers are
/// integers or decimals ("12", "0.25"); `x` is the cross keyword only when
/// both neighbours are whitespace or brackets, otherwise an identifier.
/// Throws LexError on any other character.
std::vector<Token> tokenize(std::string_view source);

// ------------------------------------------------------------------- AST

enum class BinaryOp { Add, Sub, Mul, Div, Dot, Cross };

struct ExprNode;
using NodePtr = std::unique_ptr<ExprNode>;

struct NumberLit {
  std::string text;
};

/// 2 or 3 elements. Elements that are themselves vectors form matrix rows.
struct VectorLit {
  std::vector<NodePtr> elements;
};

struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
  std::size_t op_position;
};

/// Negation.
struct Unary {
  NodePtr operand;
};

/// Nonzero integer exponent.
struct Power {
  NodePtr base;
  int exponent;
};

/// Function call; a bare identifier such as I2 is a call with no arguments.
struct Call {
  std::string name;
  std::vector<NodePtr> args;
};

struct ExprNode {
  std::size_t position;
  std::variant<NumberLit, VectorLit, Binary, Unary, Power, Call> node;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/"|"."|"x") factor)*
///   factor := unary ("^" "-"? integer)?
///   unary  := "-" unary | atom
///   atom   := number | "[" expr ("," expr)+ "]" | "(" expr ")"
///           | ident "(" expr ("," expr)* ")" | ident
NodePtr parse(const std::vector<Token>& tokens);

/// tokenize + parse.
NodePtr parse(std::string_view source);

/// Fully parenthesized source text that parses back to the same tree.
std::string to_source(const ExprNode& node);

/// Equality of tree shape, operators and literals; positions are ignored.
bool structurally_equal(const ExprNode& lhs, const ExprNode& rhs);

}  // namespace vecq::expr
