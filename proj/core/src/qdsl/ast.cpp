#include "qtrunc/qdsl/ast.hpp"

#include <ostream>

namespace qtrunc::qdsl {

Expr Expr::integer(std::int64_t v, SourceLocation loc) {
  Expr e;
  e.kind = NodeKind::Integer;
  e.value = v;
  e.loc = loc;
  return e;
}

Expr Expr::ident(std::string name, SourceLocation loc) {
  Expr e;
  e.kind = NodeKind::Name;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::unary(NodeKind kind, Expr operand, SourceLocation loc) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::binary(NodeKind kind, Expr lhs, Expr rhs, SourceLocation loc) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

Expr Expr::power(Expr base, std::int64_t exponent, SourceLocation loc) {
  Expr e = unary(NodeKind::Pow, std::move(base), loc);
  e.value = exponent;
  return e;
}

Expr Expr::call(std::string name, std::vector<Expr> args, SourceLocation loc) {
  Expr e;
  e.kind = NodeKind::Call;
  e.name = std::move(name);
  e.args = std::move(args);
  e.loc = loc;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.args == b.args;
}

int builtin_arity(const std::string& name) {
  if (name == "sum") return 4;
  if (name == "qpow" || name == "binom2") return 1;
  if (name == "qbin" || name == "poch") return 2;
  return -1;
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
      return 2;
    case NodeKind::Neg:
      return 3;
    case NodeKind::Pow:
    case NodeKind::Sign:
      return 4;
    case NodeKind::Integer:
      return e.value < 0 ? 3 : 5;
    case NodeKind::Name:
    case NodeKind::Call:
      return 5;
  }
  return 0;
}

void render_to(std::string& out, const Expr& e);

void render_wrapped(std::string& out, const Expr& e, bool wrap) {
  if (wrap) out += '(';
  render_to(out, e);
  if (wrap) out += ')';
}

void render_to(std::string& out, const Expr& e) {
  switch (e.kind) {
    case NodeKind::Integer:
      out += std::to_string(e.value);
      return;
    case NodeKind::Name:
      out += e.name;
      return;
    case NodeKind::Call:
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        render_to(out, e.args[i]);
      }
      out += ')';
      return;
    case NodeKind::Neg:
      out += '-';
      render_wrapped(out, e.args[0], precedence(e.args[0]) < 3);
      return;
    case NodeKind::Add:
    case NodeKind::Sub:
      render_wrapped(out, e.args[0], precedence(e.args[0]) < 1);
      out += e.kind == NodeKind::Add ? " + " : " - ";
      render_wrapped(out, e.args[1], precedence(e.args[1]) <= 1);
      return;
    case NodeKind::Mul:
    case NodeKind::Div:
      render_wrapped(out, e.args[0], precedence(e.args[0]) < 2);
      out += e.kind == NodeKind::Mul ? " * " : " / ";
      render_wrapped(out, e.args[1], precedence(e.args[1]) <= 2);
      return;
    case NodeKind::Pow:
      render_wrapped(out, e.args[0], precedence(e.args[0]) < 5);
      out += '^';
      out += std::to_string(e.value);
      return;
    case NodeKind::Sign:
      out += "(-1)^";
      if (e.args[0].kind == NodeKind::Integer) {
        out += std::to_string(e.args[0].value);
      } else {
        render_wrapped(out, e.args[0], precedence(e.args[0]) < 5);
      }
      return;
  }
}

void collect_free(const Expr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  if (e.kind == NodeKind::Name) {
    if (e.name != kIndeterminate && !bound.count(e.name)) out.insert(e.name);
    return;
  }
  if (e.kind == NodeKind::Call && e.name == "sum" && e.args.size() == 4 && e.args[0].kind == NodeKind::Name) {
    collect_free(e.args[1], bound, out);
    collect_free(e.args[2], bound, out);
    const bool fresh = bound.insert(e.args[0].name).second;
    collect_free(e.args[3], bound, out);
    if (fresh) bound.erase(e.args[0].name);
    return;
  }
  for (const auto& a : e.args) collect_free(a, bound, out);
}

}  // namespace

std::string render(const Expr& e) {
  std::string out;
  render_to(out, e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << render(e); }

std::set<std::string> free_parameters(const Expr& e) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(e, bound, out);
  return out;
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& a : e.args) n += node_count(a);
  return n;
}

}  // namespace qtrunc::qdsl
