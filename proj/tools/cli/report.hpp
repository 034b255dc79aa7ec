#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtrunc/rational_function.hpp"

namespace qtrunc::cli {

inline constexpr const char* kReportSchema = "qtrunc-report/1";

/// Selected by QTRUNC_VERBOSITY: "quiet", "normal" (default) or "timing".
/// Only "timing" adds wall-clock fields, so default reports are reproducible.
enum class Verbosity { Quiet, Normal, Timing };
Verbosity verbosity_from_env();

struct CaseRecord {
  std::string id;
  std::string param_name;
  long param = 0;
  std::optional<bool> pass;  // empty for tabulated values with nothing to compare
  std::optional<RationalFunction> lhs;
  std::optional<RationalFunction> rhs;
  std::string error;
  double wall_ms = 0;
};

struct RecurrenceRecord {
  std::string recurrence_id;
  long n;
  std::string residual;
  bool pass;
};

struct Report {
  std::vector<std::string> command;
  std::vector<CaseRecord> cases;
  std::vector<RecurrenceRecord> recurrences;
  std::vector<std::string> notes;

  std::size_t failed() const;
  /// 0 when no case failed, 1 otherwise.
  int exit_code() const;

  nlohmann::ordered_json to_json(Verbosity v) const;
  void print(std::ostream& os, Verbosity v) const;
};

/// Header fields shared by every JSON document the tool prints.
nlohmann::ordered_json json_header(const std::vector<std::string>& command);

/// Ascending rendering cut after max_terms terms of the numerator, with
/// " … (+k terms)" marking the cut.
std::string render_elided(const RationalFunction& f, std::size_t max_terms = 12);

}  // namespace qtrunc::cli
