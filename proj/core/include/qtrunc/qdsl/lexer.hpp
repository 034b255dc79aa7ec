#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtrunc/qdsl/errors.hpp"

namespace qtrunc::qdsl {

enum class TokenKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

std::string_view describe(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  std::int64_t value = 0;  // Integer tokens only
  SourceLocation loc;
  /// Star inserted between an integer and an identifier written without a
  /// space, as in "2q^4".
  bool implicit = false;
};

/// Throws SyntaxError on characters outside the language or oversized literals.
std::vector<Token> tokenize(std::string_view src, SourceLocation origin = {});

}  // namespace qtrunc::qdsl
