#include "qtrunc/qdsl/eval.hpp"

#include <sstream>

#include "qtrunc/qcomb.hpp"

namespace qtrunc::qdsl {
namespace {

using Int = std::int64_t;
using IndexTrail = std::vector<std::pair<std::string, Int>>;

std::string pole_message(const std::string& detail, const IndexTrail& indices) {
  std::ostringstream os;
  os << "pole: " << detail;
  if (!indices.empty()) {
    os << " at";
    for (const auto& [name, v] : indices) os << ' ' << name << '=' << v;
  }
  return os.str();
}

std::string where(const Expr& e) { return std::to_string(e.loc.line) + ":" + std::to_string(e.loc.column); }

[[noreturn]] void overflow(const Expr& e) { throw EvalError(where(e) + ": integer overflow in '" + render(e) + "'"); }

Int checked_add(Int a, Int b, const Expr& e) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow(e);
  return r;
}

Int checked_sub(Int a, Int b, const Expr& e) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow(e);
  return r;
}

Int checked_mul(Int a, Int b, const Expr& e) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow(e);
  return r;
}

bool is_zero(const Value& v) {
  if (const Int* i = std::get_if<Int>(&v)) return *i == 0;
  return std::get<RationalFunction>(v).is_zero();
}

class Evaluator {
 public:
  explicit Evaluator(const Bindings& bindings) : env_(bindings.begin(), bindings.end()) {}

  Value value(const Expr& e) {
    switch (e.kind) {
      case NodeKind::Integer:
        return e.value;
      case NodeKind::Name:
        return name(e);
      case NodeKind::Neg:
        return negate(value(e.args[0]), e);
      case NodeKind::Add:
      case NodeKind::Sub:
        return arithmetic(e, value(e.args[0]), value(e.args[1]));
      case NodeKind::Mul:
      case NodeKind::Div: {
        // A vanishing left factor or numerator ends the product before the
        // right side is looked at, so 0 * (pole) and 0 / 0 read as 0.
        Value lhs = value(e.args[0]);
        if (is_zero(lhs)) return Int{0};
        return arithmetic(e, lhs, value(e.args[1]));
      }
      case NodeKind::Pow:
        return power(value(e.args[0]), e.value, e);
      case NodeKind::Sign: {
        const Int k = integer(e.args[0]);
        return Int{k % 2 == 0 ? 1 : -1};
      }
      case NodeKind::Call:
        return call(e);
    }
    throw EvalError("malformed expression");
  }

  Int integer(const Expr& e) {
    const Value v = value(e);
    if (const Int* i = std::get_if<Int>(&v)) return *i;
    const auto& rf = std::get<RationalFunction>(v);
    if (rf.is_zero()) return 0;
    if (rf.is_polynomial() && rf.num().is_constant() && rf.den().is_constant()) {
      const Rational c = rf.num().coefficient(0) / rf.den().coefficient(0);
      if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
    }
    throw EvalError(where(e) + ": expected an integer, '" + render(e) + "' evaluates to " + to_string(rf));
  }

 private:
  Value name(const Expr& e) {
    if (e.name == kIndeterminate) return RationalFunction(LaurentPoly::q_power(1));
    auto it = env_.find(e.name);
    if (it == env_.end()) throw EvalError(where(e) + ": unbound parameter '" + e.name + "'");
    return it->second;
  }

  static Value negate(const Value& v, const Expr& e) {
    if (const Int* i = std::get_if<Int>(&v)) return checked_sub(0, *i, e);
    return -std::get<RationalFunction>(v);
  }

  static Value arithmetic(const Expr& e, const Value& a, const Value& b) {
    const Int* ia = std::get_if<Int>(&a);
    const Int* ib = std::get_if<Int>(&b);
    if (ia && ib && e.kind != NodeKind::Div) {
      switch (e.kind) {
        case NodeKind::Add:
          return checked_add(*ia, *ib, e);
        case NodeKind::Sub:
          return checked_sub(*ia, *ib, e);
        default:
          return checked_mul(*ia, *ib, e);
      }
    }
    const RationalFunction x = to_rational_function(a);
    const RationalFunction y = to_rational_function(b);
    switch (e.kind) {
      case NodeKind::Add:
        return x + y;
      case NodeKind::Sub:
        return x - y;
      case NodeKind::Mul:
        return x * y;
      default:
        if (y.is_zero()) throw ZeroDivisionError("division by zero in '" + render(e) + "'");
        return x / y;
    }
  }

  static Value power(const Value& base, Int exponent, const Expr& e) {
    if (const Int* b = std::get_if<Int>(&base); b && exponent >= 0) {
      Int r = 1;
      for (Int k = 0; k < exponent; ++k) {
        r = checked_mul(r, *b, e);
        if (r == 0 || r == 1) break;
      }
      return r;
    }
    const RationalFunction rf = to_rational_function(base);
    if (rf.is_zero() && exponent < 0) throw ZeroDivisionError("zero raised to a negative power in '" + render(e) + "'");
    if (exponent > (1 << 20) || exponent < -(1 << 20)) throw EvalError(where(e) + ": exponent too large");
    return rf.pow(static_cast<long>(exponent));
  }

  Value call(const Expr& e) {
    const std::string& f = e.name;
    if (f == "sum") return sum(e);
    if (f == "qpow") return RationalFunction(LaurentPoly::q_power(integer(e.args[0])));
    if (f == "binom2") {
      const Int x = integer(e.args[0]);
      return checked_mul(x, checked_sub(x, 1, e), e) / 2;
    }
    if (f == "qbin") return RationalFunction(qbinom(integer(e.args[0]), integer(e.args[1])));
    if (f == "poch") {
      const RationalFunction base = to_rational_function(value(e.args[0]));
      if (!base.is_polynomial() || !base.num().is_monomial()) {
        throw EvalError(where(e) + ": poch base must be a monomial");
      }
      const auto& [exp, coeff] = base.num().terms()[0];
      return qpoch(MonomialBase(coeff / base.den().coefficient(0), exp), integer(e.args[1]));
    }
    throw EvalError(where(e) + ": unknown builtin '" + f + "'");
  }

  Value sum(const Expr& e) {
    const std::string& var = e.args[0].name;
    const Int lo = integer(e.args[1]);
    const Int hi = integer(e.args[2]);
    LaurentPoly poly;
    RationalFunction rest;
    const auto saved = env_.find(var);
    if (saved != env_.end()) throw EvalError(where(e) + ": index '" + var + "' is already bound");
    for (Int k = lo; k <= hi; ++k) {
      env_[var] = k;
      Value term;
      try {
        term = value(e.args[3]);
      } catch (const PoleError& err) {
        env_.erase(var);
        IndexTrail trail{{var, k}};
        trail.insert(trail.end(), err.indices().begin(), err.indices().end());
        throw PoleError(err.detail(), std::move(trail));
      } catch (const ZeroDivisionError& err) {
        env_.erase(var);
        throw PoleError(err.what(), {{var, k}});
      }
      if (const Int* i = std::get_if<Int>(&term)) {
        poly += LaurentPoly(static_cast<long>(*i));
      } else {
        const auto& rf = std::get<RationalFunction>(term);
        if (rf.is_polynomial()) {
          poly += rf.num() * LaurentPoly(Rational(1) / rf.den().coefficient(0));
        } else {
          rest += rf;
        }
      }
    }
    env_.erase(var);
    return rest + RationalFunction(std::move(poly));
  }

  std::map<std::string, Int, std::less<>> env_;
};

}  // namespace

PoleError::PoleError(std::string detail, std::vector<std::pair<std::string, std::int64_t>> indices)
    : EvalError(pole_message(detail, indices)), detail_(std::move(detail)), indices_(std::move(indices)) {}

RationalFunction to_rational_function(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return RationalFunction(Rational(static_cast<long>(*i)));
  return std::get<RationalFunction>(v);
}

Value eval_value(const Expr& e, const Bindings& bindings) {
  if (bindings.count(kIndeterminate)) throw EvalError("q is the indeterminate and cannot be bound");
  Evaluator ev(bindings);
  try {
    return ev.value(e);
  } catch (const ZeroDivisionError& err) {
    throw PoleError(err.what(), {});
  }
}

RationalFunction eval(const Expr& e, const Bindings& bindings) { return to_rational_function(eval_value(e, bindings)); }

std::vector<RangeCase> verify_range(const Expr& lhs, const Expr& rhs, const std::string& param, std::int64_t lo,
                                    std::int64_t hi) {
  if (param == kIndeterminate) throw EvalError("q cannot be the identity parameter");
  for (const Expr* side : {&lhs, &rhs}) {
    for (const auto& name : free_parameters(*side)) {
      if (name != param) {
        throw EvalError("'" + render(*side) + "' has free parameter '" + name + "' besides '" + param + "'");
      }
    }
  }
  std::vector<RangeCase> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    const Bindings b{{param, p}};
    out.push_back({p, eval(lhs, b), eval(rhs, b)});
  }
  return out;
}

}  // namespace qtrunc::qdsl
