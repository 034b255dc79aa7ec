#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qtrunc/qdsl/ast.hpp"

namespace qtrunc::qdsl {

/// A candidate identity stored as text:
///
///   # comment
///   id: LIU-T1
///   param: L
///   min: 1
///   range: 1..10
///   lhs: sum(k, -L, L, (-1)^k * qpow(k^2) * poch(-q, L-k) * qbin(3*L-k+1, L+k))
///   rhs: 1
///
/// `id`, `min` and `range` are optional. An expression may continue on
/// following lines indented by whitespace.
struct QidFile {
  std::string id;
  std::string param;
  std::int64_t param_min = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
  Expr lhs;
  Expr rhs;
};

/// Throws SyntaxError with positions relative to the whole file.
QidFile parse_qid(std::string_view text);
/// Throws Error if the file cannot be read.
QidFile load_qid(const std::filesystem::path& path);

}  // namespace qtrunc::qdsl
