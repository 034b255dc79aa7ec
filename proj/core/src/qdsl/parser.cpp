#include "qtrunc/qdsl/parser.hpp"

#include <set>
#include <string>
#include <vector>

#include "qtrunc/qdsl/eval.hpp"
#include "qtrunc/qdsl/lexer.hpp"

namespace qtrunc::qdsl {
namespace {

constexpr int kMaxDepth = 200;

std::string where(SourceLocation loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column); }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != TokenKind::End) {
      if (peek().kind == TokenKind::RParen) throw SyntaxError(peek().loc, "unbalanced parenthesis: unmatched ')'");
      fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.loc, "unexpected " + found, std::move(expected));
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw SyntaxError(parser.peek().loc, "expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = next();
      Expr rhs = term();
      lhs = Expr::binary(op.kind == TokenKind::Plus ? NodeKind::Add : NodeKind::Sub, std::move(lhs), std::move(rhs), op.loc);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token& op = next();
      Expr rhs = unary();
      lhs = Expr::binary(op.kind == TokenKind::Star ? NodeKind::Mul : NodeKind::Div, std::move(lhs), std::move(rhs), op.loc);
    }
    return lhs;
  }

  Expr unary() {
    DepthGuard guard(*this);
    if (peek().kind == TokenKind::Minus) {
      const SourceLocation loc = next().loc;
      return Expr::unary(NodeKind::Neg, unary(), loc);
    }
    return power();
  }

  std::int64_t signed_integer() {
    const bool negative = accept(TokenKind::Minus);
    if (peek().kind != TokenKind::Integer) fail({"integer"});
    const std::int64_t v = next().value;
    return negative ? -v : v;
  }

  static bool is_minus_one(const Expr& e) {
    return e.kind == NodeKind::Neg && e.args[0].kind == NodeKind::Integer && e.args[0].value == 1;
  }

  Expr power() {
    bool parenthesized = false;
    Expr base = atom(parenthesized);
    if (peek().kind != TokenKind::Caret) return base;
    const SourceLocation loc = next().loc;
    if (parenthesized && is_minus_one(base)) {
      if (peek().kind == TokenKind::Minus) return Expr::unary(NodeKind::Sign, Expr::integer(signed_integer(), loc), loc);
      bool ignored = false;
      return Expr::unary(NodeKind::Sign, atom(ignored), loc);
    }
    if (peek().kind != TokenKind::Integer && peek().kind != TokenKind::Minus) {
      throw SyntaxError(peek().loc, "exponent must be an integer literal; use qpow(e) or (-1)^e for symbolic exponents",
                        {"integer", "'-'"});
    }
    return Expr::power(std::move(base), signed_integer(), loc);
  }

  Expr atom(bool& parenthesized) {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        ++pos_;
        return Expr::integer(t.value, t.loc);
      case TokenKind::Ident:
        ++pos_;
        if (peek().kind == TokenKind::LParen) return call(t);
        return Expr::ident(t.text, t.loc);
      case TokenKind::LParen: {
        ++pos_;
        Expr inner = expr();
        close_paren(t.loc);
        parenthesized = true;
        return inner;
      }
      default:
        fail({"integer", "identifier", "'('", "'-'"});
    }
  }

  void close_paren(SourceLocation open) {
    if (accept(TokenKind::RParen)) return;
    if (peek().kind == TokenKind::End) {
      throw SyntaxError(peek().loc, "unbalanced parenthesis: '(' at " + where(open) + " is never closed", {"')'"});
    }
    fail({"')'", "'+'", "'-'", "'*'", "'/'"});
  }

  Expr call(const Token& name) {
    const SourceLocation open = next().loc;
    const int arity = builtin_arity(name.text);
    if (arity < 0) {
      throw SyntaxError(name.loc, "unknown builtin '" + name.text + "'", {"sum", "qpow", "qbin", "poch", "binom2"});
    }
    std::vector<Expr> args;
    args.push_back(expr());
    while (accept(TokenKind::Comma)) args.push_back(expr());
    if (peek().kind != TokenKind::RParen) {
      if (peek().kind == TokenKind::End) {
        throw SyntaxError(peek().loc, "unbalanced parenthesis: '(' at " + where(open) + " is never closed",
                          {"','", "')'"});
      }
      fail({"','", "')'"});
    }
    ++pos_;
    if (static_cast<int>(args.size()) != arity) {
      throw SyntaxError(name.loc, name.text + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                                      ", got " + std::to_string(args.size()));
    }
    return Expr::call(name.text, std::move(args), name.loc);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// 0 for constants, 1 for affine expressions; throws otherwise.
int affine_degree(const Expr& e) {
  auto reject = [&]() -> int {
    throw SyntaxError(e.loc, "sum bounds must be affine integer expressions in parameters and enclosing indices");
  };
  switch (e.kind) {
    case NodeKind::Integer:
      return 0;
    case NodeKind::Name:
      return e.name == kIndeterminate ? reject() : 1;
    case NodeKind::Neg:
      return affine_degree(e.args[0]);
    case NodeKind::Add:
    case NodeKind::Sub:
      return std::max(affine_degree(e.args[0]), affine_degree(e.args[1]));
    case NodeKind::Mul: {
      const int d = affine_degree(e.args[0]) + affine_degree(e.args[1]);
      return d <= 1 ? d : reject();
    }
    case NodeKind::Pow: {
      const int d = affine_degree(e.args[0]);
      if (d == 0 && e.value >= 0) return 0;
      if (d == 1 && (e.value == 0 || e.value == 1)) return static_cast<int>(e.value);
      return reject();
    }
    default:
      return reject();
  }
}

void check_poch_base(const Expr& base) {
  const auto fail = [&] {
    throw SyntaxError(base.loc, "poch base must be a monomial c*q^k with constant c and k, got '" + render(base) + "'");
  };
  if (!free_parameters(base).empty()) fail();
  RationalFunction v;
  try {
    v = eval(base, {});
  } catch (const Error&) {
    fail();
  }
  if (!v.is_polynomial() || !v.num().is_monomial() || !v.den().is_constant()) fail();
}

void check(const Expr& e, std::set<std::string>& bound) {
  if (e.kind == NodeKind::Call) {
    if (e.name == "sum") {
      const Expr& var = e.args[0];
      if (var.kind != NodeKind::Name) throw SyntaxError(var.loc, "sum index must be an identifier", {"identifier"});
      if (var.name == kIndeterminate) throw SyntaxError(var.loc, "q cannot be used as a summation index");
      if (bound.count(var.name)) throw SyntaxError(var.loc, "index '" + var.name + "' shadows an enclosing sum index");
      affine_degree(e.args[1]);
      affine_degree(e.args[2]);
      check(e.args[1], bound);
      check(e.args[2], bound);
      bound.insert(var.name);
      check(e.args[3], bound);
      bound.erase(var.name);
      return;
    }
    if (e.name == "poch") check_poch_base(e.args[0]);
  }
  for (const auto& a : e.args) check(a, bound);
}

}  // namespace

Expr parse(std::string_view src, SourceLocation origin) {
  Parser parser(tokenize(src, origin));
  Expr e = parser.parse_all();
  std::set<std::string> bound;
  check(e, bound);
  return e;
}

}  // namespace qtrunc::qdsl
