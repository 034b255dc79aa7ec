#include "qtrunc/qdsl/qid_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qtrunc/qdsl/lexer.hpp"
#include "qtrunc/qdsl/parser.hpp"

namespace qtrunc::qdsl {
namespace {

struct Field {
  std::string text;
  SourceLocation loc;
};

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view s, SourceLocation loc, const char* what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw SyntaxError(loc, std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

QidFile parse_qid(std::string_view text) {
  static const std::set<std::string> keys{"id", "param", "min", "range", "lhs", "rhs"};
  std::map<std::string, Field> fields;
  std::string* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (blank(line) || trim(line).front() == '#') {
      current = nullptr;
      continue;
    }
    if (line.front() == ' ' || line.front() == '\t') {
      if (!current) throw SyntaxError({line_no, 1}, "indented line does not continue a field");
      *current += '\n';
      *current += line;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw SyntaxError({line_no, 1}, "expected 'key: value'", keys);
    const std::string key(trim(line.substr(0, colon)));
    if (!keys.count(key)) throw SyntaxError({line_no, 1}, "unknown key '" + key + "'", keys);
    if (fields.count(key)) throw SyntaxError({line_no, 1}, "duplicate key '" + key + "'");
    Field& f = fields[key];
    f.text = std::string(line.substr(colon + 1));
    f.loc = {line_no, static_cast<int>(colon) + 2};
    current = &f.text;
  }

  for (const char* required : {"param", "lhs", "rhs"}) {
    if (!fields.count(required)) throw SyntaxError({line_no, 1}, std::string("missing required key '") + required + "'");
  }

  QidFile out;
  if (auto it = fields.find("id"); it != fields.end()) out.id = std::string(trim(it->second.text));
  const Field& param = fields.at("param");
  out.param = std::string(trim(param.text));
  const auto toks = tokenize(out.param, param.loc);
  if (toks.size() != 2 || toks[0].kind != TokenKind::Ident || out.param == kIndeterminate) {
    throw SyntaxError(param.loc, "param must be an identifier other than q", {"identifier"});
  }
  if (auto it = fields.find("min"); it != fields.end()) out.param_min = parse_int(it->second.text, it->second.loc, "min");
  if (auto it = fields.find("range"); it != fields.end()) {
    const std::string_view r = trim(it->second.text);
    const auto dots = r.find("..");
    if (dots == std::string_view::npos) throw SyntaxError(it->second.loc, "range must look like lo..hi", {"'..'"});
    out.range = std::make_pair(parse_int(r.substr(0, dots), it->second.loc, "range"),
                               parse_int(r.substr(dots + 2), it->second.loc, "range"));
  }
  out.lhs = parse(fields.at("lhs").text, fields.at("lhs").loc);
  out.rhs = parse(fields.at("rhs").text, fields.at("rhs").loc);
  auto check_declared = [&](const Expr& e, const Field& f) {
    for (const auto& name : free_parameters(e)) {
      if (name != out.param) throw SyntaxError(f.loc, "undeclared parameter '" + name + "' (declared: " + out.param + ")");
    }
  };
  check_declared(out.lhs, fields.at("lhs"));
  check_declared(out.rhs, fields.at("rhs"));
  return out;
}

QidFile load_qid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_qid(ss.str());
}

}  // namespace qtrunc::qdsl
