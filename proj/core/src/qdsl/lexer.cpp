#include "qtrunc/qdsl/lexer.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qtrunc::qdsl {
namespace {

std::string format_error(SourceLocation loc, const std::string& message, const std::set<std::string>& expected) {
  std::ostringstream os;
  os << loc.line << ':' << loc.column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      os << (first ? "" : ", ") << e;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

SyntaxError::SyntaxError(SourceLocation loc, std::string message, std::set<std::string> expected)
    : Error(format_error(loc, message, expected)),
      loc_(loc),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Integer:
      return "integer";
    case TokenKind::Ident:
      return "identifier";
    case TokenKind::Plus:
      return "'+'";
    case TokenKind::Minus:
      return "'-'";
    case TokenKind::Star:
      return "'*'";
    case TokenKind::Slash:
      return "'/'";
    case TokenKind::Caret:
      return "'^'";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::End:
      return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src, SourceLocation origin) {
  std::vector<Token> out;
  SourceLocation loc = origin;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourceLocation start = loc;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        const int d = src[j] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
          throw SyntaxError(start, "integer literal out of range");
        }
        v = v * 10 + d;
        ++j;
      }
      out.push_back({TokenKind::Integer, std::string(src.substr(i, j - i)), v, start});
      advance(j - i);
      if (i < src.size() && ident_start(src[i])) out.push_back({TokenKind::Star, "*", 0, loc, true});
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({TokenKind::Ident, std::string(src.substr(i, j - i)), 0, start});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+':
        kind = TokenKind::Plus;
        break;
      case '-':
        kind = TokenKind::Minus;
        break;
      case '*':
        kind = TokenKind::Star;
        break;
      case '/':
        kind = TokenKind::Slash;
        break;
      case '^':
        kind = TokenKind::Caret;
        break;
      case '(':
        kind = TokenKind::LParen;
        break;
      case ')':
        kind = TokenKind::RParen;
        break;
      case ',':
        kind = TokenKind::Comma;
        break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + [&] {
          std::ostringstream hex;
          hex << std::hex << static_cast<int>(static_cast<unsigned char>(c));
          return hex.str();
        }();
        throw SyntaxError(start, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({kind, std::string(1, c), 0, start});
    advance(1);
  }
  out.push_back({TokenKind::End, "", 0, loc});
  return out;
}

}  // namespace qtrunc::qdsl
