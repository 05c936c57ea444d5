#include "nlab/dsl/lexer.hpp"

#include <cctype>

namespace nlab::dsl {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::string token)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
            (token.empty() ? std::string() : " (at '" + token + "')")),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Int: return "integer";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Newline: return "end of line";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto push = [&](TokenKind kind, std::size_t start, std::size_t len) {
    out.push_back({kind, std::string(text.substr(start, len)), line, column});
    column += len;
    i = start + len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      out.push_back({TokenKind::Newline, "", line, column});
      ++line;
      column = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(TokenKind::Int, i, j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      push(TokenKind::Ident, i, j - i);
    } else {
      TokenKind kind;
      switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '/': kind = TokenKind::Slash; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '=': kind = TokenKind::Equals; break;
        default:
          throw ParseError(ParseError::Kind::Syntax, line, column, "unexpected character",
                           std::string(1, c));
      }
      push(kind, i, 1);
    }
  }
  out.push_back({TokenKind::End, "", line, column});
  return out;
}

}  // namespace nlab::dsl
