// Runs the nine acceptance criteria with exact equality and prints one
// PASS/FAIL line for each. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtrunc/catalog.hpp"
#include "qtrunc/multisum.hpp"
#include "qtrunc/qcomb.hpp"
#include "qtrunc/qdsl/errors.hpp"
#include "qtrunc/qdsl/eval.hpp"
#include "qtrunc/qdsl/parser.hpp"
#include "qtrunc/qdsl/qid_file.hpp"
#include "qtrunc/recurrence.hpp"
#include "qtrunc/truncated_series.hpp"

namespace {

using namespace qtrunc;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

Outcome catalog_suite() {
  Outcome o;
  for (const auto& e : catalog().entries()) {
    if (e.kind == IdentityKind::Series) continue;
    for (long p = e.param_min; p <= 40; ++p) o.expect(e.holds_at(p), e.id + " at " + std::to_string(p));
  }
  return o;
}

Outcome substitution_suite() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> required{
      {"JOUHET-U", "LIU-T1"}, {"NEW-A", "NEW-A-TRUNC"}, {"NEW-B", "NEW-B-TRUNC"}, {"EZ", "BG"}, {"EZ", "WARNAAR"}};
  for (const auto& [source, target] : required) {
    bool found = false;
    for (const auto& r : substitution_recipes()) found = found || (r.source == source && r.target == target);
    o.expect(found, "missing recipe " + source + " -> " + target);
  }
  for (const auto& recipe : substitution_recipes()) {
    for (long L = 1; L <= 12; ++L) {
      for (const auto& t : check_substitution(recipe, L))
        o.expect(t.equal(), recipe.source + " -> " + recipe.target + " L=" + std::to_string(L) + " k=" + std::to_string(t.k));
    }
  }
  return o;
}

Outcome law_suite() {
  Outcome o;
  for (long n = 0; n <= 30; ++n) {
    o.expect(qpoch_qinv_law(n).holds(), "qpoch law n=" + std::to_string(n));
    for (long m = 0; m <= n; ++m) o.expect(qbinom_qinv_law(n, m).holds(), "qbinom law " + std::to_string(n) + "," + std::to_string(m));
  }
  for (long n = 1; n <= 30; ++n) {
    for (long r = 1; r <= n; ++r) {
      const auto law = pascal_variant(n, r);
      o.expect(law.lhs == RationalFunction(law.rhs), "pascal variant " + std::to_string(n) + "," + std::to_string(r));
    }
  }
  return o;
}

Outcome closed_form_suite() {
  Outcome o;
  for (auto which : {ClosedForm::U2, ClosedForm::U3, ClosedForm::W2, ClosedForm::W3}) {
    for (long n = 1; n <= 8; ++n)
      o.expect(closed_form_sequence(which, n) == closed_form(which, n), std::string(to_string(which)) + " n=" + std::to_string(n));
  }
  for (long n = 1; n <= 8; ++n) o.expect(um(2, n).is_zero(), "U_2 vanishes at n=" + std::to_string(n));
  const LaurentPoly w31 = (LaurentPoly::q_power(1).scaled(3) - LaurentPoly::q_power(3)).scaled(Rational(1, 2));
  o.expect(wm(3, 1) == RationalFunction(w31), "W_3(1) = (3q - q^3)/2");
  return o;
}

Outcome recurrence_suite() {
  Outcome o;
  for (const auto& rec : recurrences()) {
    for (const auto& c : verify_recurrence(rec, [&](long n) { return closed_form_sequence(rec.sequence, n); }, 1, 4))
      o.expect(c.pass(), rec.id + " n=" + std::to_string(c.n) + " residual " + to_string(c.residual));
  }
  return o;
}

Outcome guo_zeng_suite() {
  Outcome o;
  for (auto kind : {GzKind::Pent1, GzKind::Pent2}) {
    for (long m = 1; m <= 4; ++m) {
      for (long L = 0; L <= 5; ++L) {
        o.expect(gz_multisum(kind, m, L) == RationalFunction(gz_rhs(kind, m, L)),
                 std::string(kind == GzKind::Pent1 ? "first" : "second") + " sum m=" + std::to_string(m) + " L=" + std::to_string(L));
      }
    }
  }
  return o;
}

Outcome series_suite() {
  Outcome o;
  const long order = 60;
  o.expect(pentagonal_sum(order) == euler_product(-1, order), "pentagonal number theorem");
  o.expect(theta_gauss(order) == euler_product(-1, order) * inverse(euler_product(+1, order)), "square exponent theorem");
  for (long L = 1; L <= 6; ++L) {
    const auto [lhs, rhs] = gz_identity_check(L, order);
    o.expect(lhs == rhs, "truncated theta L=" + std::to_string(L));
  }
  const auto e = euler_exponential_check(order);
  o.expect(e.series_sum == e.product, "Euler exponential sum");
  o.expect(e.middle_form == e.product, "Euler exponential middle form");
  return o;
}

Outcome mutation_suite() {
  Outcome o;
  for (const auto& e : catalog().entries()) {
    if (!e.sum) continue;
    for (auto kind : {MutationKind::ExponentShift, MutationKind::SignFlip}) {
      for (auto scope : {MutationScope::AllTerms, MutationScope::FirstTerm}) {
        const Identity mutant = mutated(e, Mutation{kind, scope});
        bool caught = false;
        for (long p = mutant.param_min; p <= 5 && !caught; ++p) caught = mutant.lhs(p) != mutant.rhs(p);
        o.expect(caught, mutant.id + " survives every parameter up to 5");
      }
    }
  }
  return o;
}

Outcome dsl_suite() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(QTRUNC_TEST_CORPUS_DIR))
    if (entry.path().extension() == ".qid") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::string> covered;
  for (const auto& path : files) {
    const auto f = qdsl::load_qid(path);
    const Identity& entry = catalog().find(f.id);
    covered.push_back(f.id);
    const auto [lo, hi] = f.range.value_or(std::pair<std::int64_t, std::int64_t>{entry.param_min, entry.param_min + 10});
    for (long p = lo; p <= hi; ++p) {
      const qdsl::Bindings b{{f.param, p}};
      const std::string where = f.id + " at " + std::to_string(p);
      o.expect(qdsl::eval(f.lhs, b) == RationalFunction(entry.lhs(p)), where + " (lhs)");
      o.expect(qdsl::eval(f.rhs, b) == RationalFunction(entry.rhs(p)), where + " (rhs)");
    }
  }
  for (const auto& id : catalog().ids(false))
    o.expect(std::find(covered.begin(), covered.end(), id) != covered.end(), "no corpus file for " + id);

  static const std::vector<std::string> vocabulary{
      "sum", "qpow", "qbin", "poch", "binom2", "foo", "q", "n", "k", "L", "(", ")", "(", ")", ",", "+",
      "-",   "*",    "/",    "^",    "0",      "1",   "2", "7", "(-1)", "-1", "#", "\n", " ", "99999999999999999999"};
  std::mt19937_64 rng(0xacce97);
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary.size() - 1);
  std::uniform_int_distribution<int> length(0, 30);
  std::size_t crashes = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string src;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) src += vocabulary[pick(rng)] + ((rng() & 1U) ? " " : "");
    try {
      (void)qdsl::parse(src);
    } catch (const qdsl::SyntaxError&) {
    } catch (const std::exception& ex) {
      ++crashes;
      if (o.pass) o.first_failure = "fuzz input '" + src + "' raised " + ex.what();
      o.pass = false;
    }
  }
  o.expect(crashes == 0, std::to_string(crashes) + " fuzz inputs escaped as non-syntax errors");
  return o;
}

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "catalog identities hold from param_min through 40", catalog_suite},
      {2, "substitution recipes map sources onto targets termwise for L <= 12", substitution_suite},
      {3, "inversion laws and the Pascal variant hold up to n = 30", law_suite},
      {4, "U_2, U_3, W_2, W_3 match their closed forms for n = 1..8", closed_form_suite},
      {5, "transcribed recurrences have zero residual for n = 1..4", recurrence_suite},
      {6, "Guo-Zeng multiple sums match for m = 1..4, L = 0..5", guo_zeng_suite},
      {7, "series identities hold through q^60", series_suite},
      {8, "every mutant fails at some parameter <= 5", mutation_suite},
      {9, "DSL corpus matches the catalog; 10^4 fuzz inputs raise only syntax errors", dsl_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "  [" << o.checks
         << " checks, " << std::fixed;
    line.precision(2);
    line << seconds << " s]";
    if (!o.pass) line << "  first failure: " << o.first_failure;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
