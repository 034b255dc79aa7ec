#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "qtrunc/qdsl/errors.hpp"

namespace qtrunc::qdsl {

enum class NodeKind {
  Integer,  // value
  Name,     // name; "q" is the indeterminate
  Neg,      // -args[0]
  Add,
  Sub,
  Mul,
  Div,
  Pow,   // args[0] ^ value
  Sign,  // (-1) ^ args[0]
  Call,  // name(args...)
};

/// Expression tree. Source locations are carried for diagnostics and do not
/// take part in equality.
struct Expr {
  NodeKind kind = NodeKind::Integer;
  std::int64_t value = 0;
  std::string name;
  std::vector<Expr> args;
  SourceLocation loc;

  static Expr integer(std::int64_t v, SourceLocation loc = {});
  static Expr ident(std::string name, SourceLocation loc = {});
  static Expr unary(NodeKind kind, Expr operand, SourceLocation loc = {});
  static Expr binary(NodeKind kind, Expr lhs, Expr rhs, SourceLocation loc = {});
  static Expr power(Expr base, std::int64_t exponent, SourceLocation loc = {});
  static Expr call(std::string name, std::vector<Expr> args, SourceLocation loc = {});

  friend bool operator==(const Expr& a, const Expr& b);
};

inline constexpr const char* kIndeterminate = "q";

/// Builtin arities; sum(var, lo, hi, body), qpow(e), qbin(a, b), poch(base, count), binom2(e).
int builtin_arity(const std::string& name);  // -1 if not a builtin

/// Source text that parses back to an equal tree.
std::string render(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Identifiers other than q that are not bound by an enclosing sum.
std::set<std::string> free_parameters(const Expr& e);

std::size_t node_count(const Expr& e);

}  // namespace qtrunc::qdsl
