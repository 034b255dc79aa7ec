#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qtrunc/qdsl/ast.hpp"
#include "qtrunc/rational_function.hpp"

namespace qtrunc::qdsl {

using Bindings = std::map<std::string, std::int64_t, std::less<>>;

/// Integer-valued subexpressions stay integers so they can serve as
/// exponents, bounds and binomial arguments.
using Value = std::variant<std::int64_t, RationalFunction>;

RationalFunction to_rational_function(const Value& v);

/// Throws EvalError for unbound names, non-integer arguments and integer
/// overflow, and for poles, with the enclosing sum indices in the message.
Value eval_value(const Expr& e, const Bindings& bindings);
RationalFunction eval(const Expr& e, const Bindings& bindings);

struct RangeCase {
  std::int64_t param;
  RationalFunction lhs;
  RationalFunction rhs;
  bool pass() const { return lhs == rhs; }
};

/// Evaluates both sides for param = lo..hi. Throws EvalError if either side
/// has free parameters other than `param`.
std::vector<RangeCase> verify_range(const Expr& lhs, const Expr& rhs, const std::string& param, std::int64_t lo,
                                    std::int64_t hi);

}  // namespace qtrunc::qdsl
