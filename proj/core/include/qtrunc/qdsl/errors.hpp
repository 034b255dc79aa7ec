#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtrunc/errors.hpp"

namespace qtrunc::qdsl {

struct SourceLocation {
  int line = 1;
  int column = 1;
};

/// Raised by the lexer, the parser and the static checks run after parsing.
class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation loc, std::string message, std::set<std::string> expected = {});

  SourceLocation location() const { return loc_; }
  const std::string& message() const { return message_; }
  /// Tokens that would have been accepted at the error position, if known.
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourceLocation loc_;
  std::string message_;
  std::set<std::string> expected_;
};

/// Raised while evaluating a well-formed expression.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A vanishing denominator met inside one or more sums. `indices` lists the
/// enclosing sum indices, outermost first.
class PoleError : public EvalError {
 public:
  PoleError(std::string detail, std::vector<std::pair<std::string, std::int64_t>> indices);

  const std::string& detail() const { return detail_; }
  const std::vector<std::pair<std::string, std::int64_t>>& indices() const { return indices_; }

 private:
  std::string detail_;
  std::vector<std::pair<std::string, std::int64_t>> indices_;
};

}  // namespace qtrunc::qdsl
