#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlab/errors.hpp"

namespace nlab::dsl {

/// Syntax or semantic error in scene/expression text. Positions are 1-based.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic, DegreeMismatch };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
             std::string token);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

enum class TokenKind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Newline, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view describe(TokenKind kind);

/// Splits text into tokens; '#' starts a comment running to end of line.
/// Always ends with an End token.
std::vector<Token> tokenize(std::string_view text);

}  // namespace nlab::dsl
