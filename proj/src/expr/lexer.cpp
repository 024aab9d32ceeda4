#include <cctype>

#include "vecq/expr/syntax.hpp"

namespace vecq::expr {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }
bool is_bracket(char c) { return c == '[' || c == ']' || c == '(' || c == ')'; }

// Whole UTF-8 sequence starting at `pos`, for error messages.
std::string character_at(std::string_view s, std::size_t pos) {
  auto lead = static_cast<unsigned char>(s[pos]);
  std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 1;
  return std::string(s.substr(pos, len));
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto single = [&](TokenKind kind) {
    tokens.push_back({kind, std::string(1, source[i]), i});
    ++i;
  };

  while (i < n) {
    char c = source[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    switch (c) {
      case '[': single(TokenKind::LBracket); continue;
      case ']': single(TokenKind::RBracket); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case ',': single(TokenKind::Comma); continue;
      case '+': single(TokenKind::Plus); continue;
      case '-': single(TokenKind::Minus); continue;
      case '*': single(TokenKind::Star); continue;
      case '/': single(TokenKind::Slash); continue;
      case '.': single(TokenKind::Dot); continue;
      case '^': single(TokenKind::Caret); continue;
      default: break;
    }

    std::size_t start = i;
    if (is_digit(c)) {
      while (i < n && is_digit(source[i])) ++i;
      // A dot is part of the number only when a digit follows it.
      if (i + 1 < n && source[i] == '.' && is_digit(source[i + 1])) {
        ++i;
        while (i < n && is_digit(source[i])) ++i;
      }
      tokens.push_back({TokenKind::Number, std::string(source.substr(start, i - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < n && is_ident_char(source[i])) ++i;
      std::string word(source.substr(start, i - start));
      bool cross = word == "x" && start > 0 && i < n &&
                   (is_space(source[start - 1]) || is_bracket(source[start - 1])) &&
                   (is_space(source[i]) || is_bracket(source[i]));
      tokens.push_back({cross ? TokenKind::CrossKw : TokenKind::Ident, std::move(word), start});
      continue;
    }
    throw LexError(i, character_at(source, i));
  }
  tokens.push_back({TokenKind::End, "", n});
  return tokens;
}

}  // namespace vecq::expr
