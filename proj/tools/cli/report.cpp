#include "report.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string_view>

namespace qtrunc::cli {

Verbosity verbosity_from_env() {
  const char* v = std::getenv("QTRUNC_VERBOSITY");
  if (!v) return Verbosity::Normal;
  const std::string_view s(v);
  if (s == "quiet") return Verbosity::Quiet;
  if (s == "timing") return Verbosity::Timing;
  return Verbosity::Normal;
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass == false; }));
}

int Report::exit_code() const { return failed() == 0 ? 0 : 1; }

nlohmann::ordered_json json_header(const std::vector<std::string>& command) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", "qtrunc"}, {"version", QTRUNC_VERSION}};
  j["command"] = command;
  return j;
}

nlohmann::ordered_json Report::to_json(Verbosity v) const {
  nlohmann::ordered_json j = json_header(command);
  auto& out = j["cases"] = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& c : cases) {
    nlohmann::ordered_json r;
    r["case"] = c.id;
    r["parameter"] = {{"name", c.param_name}, {"value", c.param}};
    r["pass"] = c.pass ? nlohmann::ordered_json(*c.pass) : nlohmann::ordered_json(nullptr);
    r["lhs"] = c.lhs ? nlohmann::ordered_json(to_string(*c.lhs)) : nlohmann::ordered_json(nullptr);
    r["rhs"] = c.rhs ? nlohmann::ordered_json(to_string(*c.rhs)) : nlohmann::ordered_json(nullptr);
    if (!c.error.empty()) r["error"] = c.error;
    if (v == Verbosity::Timing) r["wall_time_ms"] = c.wall_ms;
    if (c.pass == true) ++passed;
    out.push_back(std::move(r));
  }
  if (!recurrences.empty()) {
    auto& recs = j["recurrences"] = nlohmann::ordered_json::array();
    for (const auto& r : recurrences) {
      recs.push_back({{"recurrence_id", r.recurrence_id}, {"n", r.n}, {"residual_rendered", r.residual}, {"pass", r.pass}});
    }
  }
  if (!notes.empty()) j["notes"] = notes;
  const std::size_t f = failed();
  j["summary"] = {{"total", cases.size()},
                  {"passed", passed},
                  {"failed", f},
                  {"unchecked", cases.size() - passed - f}};
  return j;
}

std::string render_elided(const RationalFunction& f, std::size_t max_terms) {
  const auto& terms = f.num().terms();
  if (terms.size() <= max_terms) return to_string(f);
  const LaurentPoly head =
      LaurentPoly::from_terms(std::vector<LaurentPoly::Term>(terms.begin(), terms.begin() + max_terms));
  std::string s = to_string(head) + " … (+" + std::to_string(terms.size() - max_terms) + " terms)";
  if (!f.is_polynomial()) s = "(" + s + ")/(" + to_string(f.den()) + ")";
  return s;
}

void Report::print(std::ostream& os, Verbosity v) const {
  if (v != Verbosity::Quiet) {
    std::vector<std::vector<std::string>> rows{{"case", "param", "result", "lhs", "rhs"}};
    if (v == Verbosity::Timing) rows.front().push_back("ms");
    for (const auto& c : cases) {
      std::vector<std::string> row{c.id, c.param_name + "=" + std::to_string(c.param),
                                   !c.pass ? "-" : (*c.pass ? "pass" : "FAIL"),
                                   c.lhs ? render_elided(*c.lhs) : (c.error.empty() ? "" : "error: " + c.error),
                                   c.rhs ? render_elided(*c.rhs) : ""};
      if (v == Verbosity::Timing) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(2) << c.wall_ms;
        row.push_back(ms.str());
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows) {
      for (std::size_t i = 0; i + 1 < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
    for (const auto& r : recurrences) {
      if (!r.pass) os << r.recurrence_id << " n=" << r.n << " residual " << r.residual << '\n';
    }
  }
  for (const auto& n : notes) os << "note: " << n << '\n';
  const std::size_t f = failed();
  const std::size_t passed =
      static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass == true; }));
  os << passed << " passed, " << f << " failed";
  if (cases.size() > passed + f) os << ", " << cases.size() - passed - f << " unchecked";
  os << '\n';
}

}  // namespace qtrunc::cli
