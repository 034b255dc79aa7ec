#pragma once

#include <string_view>

#include "qtrunc/qdsl/ast.hpp"

namespace qtrunc::qdsl {

/// Parses one expression and runs the static checks: builtin names and
/// arities, sum index variables, affine sum bounds, monomial poch bases.
/// Throws SyntaxError. `origin` shifts reported positions, for expressions
/// embedded in a larger file.
Expr parse(std::string_view src, SourceLocation origin = {});

}  // namespace qtrunc::qdsl
