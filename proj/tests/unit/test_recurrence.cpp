#include <gtest/gtest.h>

#include <map>

#include "qtrunc/errors.hpp"
#include "qtrunc/multisum.hpp"
#include "qtrunc/recurrence.hpp"

namespace {

using qtrunc::ClosedForm;
using qtrunc::LaurentPoly;
using qtrunc::RationalFunction;

LaurentPoly from_pairs(std::initializer_list<std::pair<long, long>> pairs) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : pairs) terms.emplace_back(e, qtrunc::Rational(c));
  return LaurentPoly::from_terms(terms);
}

// Every coefficient at n = 0, expanded independently with a computer algebra
// system from their product forms and frozen here.
const std::map<std::string, std::vector<LaurentPoly>>& expanded_at_zero() {
  static const std::map<std::string, std::vector<LaurentPoly>> table = {
      {"REC-U2", {from_pairs({{8, -1}}), LaurentPoly(), from_pairs({{0, 1}})}},
      {"REC-U3", {from_pairs({{12, 1}}), LaurentPoly(), from_pairs({{0, 1}})}},
      {"REC-W2",
       {from_pairs({{11, -1}, {14, -1}}), from_pairs({{10, -1}, {13, -1}}), from_pairs({{7, 1}, {8, 1}}),
        from_pairs({{0, 1}, {1, 1}})}},
      {"REC-W3",
       {from_pairs({{24, -1}, {26, -3}, {27, 1}, {28, -3}, {29, 1}, {30, -2}, {31, 1}, {32, 1}, {34, 3}, {35, -1}, {36, 3},
                    {37, -1}, {38, 2}, {39, -1}}),
        from_pairs({{23, 1}, {24, -1}, {25, 2}, {26, 3}, {27, 4}, {28, -5}, {29, 5}, {30, 6}, {31, -6}, {32, -6}, {33, 5},
                    {34, 3}, {35, -12}, {36, -1}, {37, 5}, {39, -5}, {40, 1}, {41, 3}, {43, -2}}),
        from_pairs({{18, -1}, {19, -3}, {20, -2}, {21, -6}, {22, -1}, {23, 6}, {25, -7}, {26, 7}, {27, 10}, {28, -7}, {29, -1},
                    {30, 10}, {32, -10}, {33, 1}, {34, 4}, {35, -1}, {36, -1}, {37, 1}, {38, 1}}),
        from_pairs({{8, -2}, {10, 5}, {11, 3}, {12, 2}, {13, 4}, {14, 2}, {15, -4}, {16, 4}, {17, -1}, {18, -7}, {19, -1},
                    {20, -4}, {21, -4}, {23, 2}, {25, 1}}),
        from_pairs({{0, -2}, {1, -1}, {2, 1}, {3, -3}, {5, 2}, {6, -2}, {7, 2}, {8, 2}, {9, -1}, {10, 1}, {11, 1}})}},
  };
  return table;
}

TEST(Recurrence, Registry) {
  const auto& recs = qtrunc::recurrences();
  ASSERT_EQ(recs.size(), 4U);
  EXPECT_EQ(qtrunc::find_recurrence("REC-U2").order(), 2);
  EXPECT_EQ(qtrunc::find_recurrence("REC-U3").order(), 2);
  EXPECT_EQ(qtrunc::find_recurrence("REC-W2").order(), 3);
  EXPECT_EQ(qtrunc::find_recurrence("REC-W3").order(), 4);
  EXPECT_THROW(qtrunc::find_recurrence("REC-X"), qtrunc::DomainError);
}

TEST(Recurrence, TranscriptionAtZero) {
  for (const auto& rec : qtrunc::recurrences()) {
    const auto& expected = expanded_at_zero().at(rec.id);
    ASSERT_EQ(static_cast<std::size_t>(rec.order() + 1), expected.size()) << rec.id;
    for (long i = 0; i <= rec.order(); ++i)
      EXPECT_EQ(rec.coefficient(i, 0), expected[static_cast<std::size_t>(i)]) << rec.id << " coefficient " << i;
  }
}

TEST(Recurrence, AffineProductEvaluation) {
  // (1 + q^{n+1}) * (-1 + 2q^{2n})
  const qtrunc::AffineProduct p{{{{1, 0, 0}, {1, 1, 1}}, {{-1, 0, 0}, {2, 2, 0}}}};
  EXPECT_EQ(p.at(3), from_pairs({{0, -1}, {4, -1}, {6, 2}, {10, 2}}));
  EXPECT_EQ(qtrunc::AffineProduct{}.at(5), LaurentPoly(1L));
}

TEST(Recurrence, MultisumsSatisfyRecurrences) {
  for (const auto& rec : qtrunc::recurrences()) {
    const auto checks = qtrunc::verify_recurrence(rec, [&](long n) { return qtrunc::closed_form_sequence(rec.sequence, n); }, 1, 3);
    ASSERT_EQ(checks.size(), 3U);
    for (const auto& c : checks) EXPECT_TRUE(c.pass()) << rec.id << " n=" << c.n << " residual " << c.residual;
  }
}

TEST(Recurrence, ClosedFormsSatisfyRecurrences) {
  for (const auto& rec : qtrunc::recurrences()) {
    const auto checks = qtrunc::verify_recurrence(rec, [&](long n) { return qtrunc::closed_form(rec.sequence, n); }, 1, 8);
    for (const auto& c : checks) EXPECT_TRUE(c.pass()) << rec.id << " n=" << c.n << " residual " << c.residual;
  }
}

TEST(Recurrence, ZeroSequenceIsTrivialSolution) {
  const auto checks = qtrunc::verify_recurrence(qtrunc::find_recurrence("REC-W2"), [](long) { return RationalFunction(); }, 1, 6);
  EXPECT_EQ(checks.size(), 6U);
  for (const auto& c : checks) EXPECT_TRUE(c.pass());
}

TEST(Recurrence, PerturbedSequenceFails) {
  for (const auto& rec : qtrunc::recurrences()) {
    const auto checks = qtrunc::verify_recurrence(
        rec, [&](long n) { return qtrunc::closed_form(rec.sequence, n) + RationalFunction(LaurentPoly::q_power(n)); }, 1, 2);
    bool any_fail = false;
    for (const auto& c : checks) any_fail = any_fail || !c.pass();
    EXPECT_TRUE(any_fail) << rec.id;
  }
}

TEST(Recurrence, PerturbedCoefficientFails) {
  qtrunc::Recurrence rec = qtrunc::find_recurrence("REC-U3");
  rec.coeffs[0].factors[0][0].offset += 1;
  const auto checks = qtrunc::verify_recurrence(rec, [](long n) { return qtrunc::closed_form(ClosedForm::U3, n); }, 1, 4);
  bool any_fail = false;
  for (const auto& c : checks) any_fail = any_fail || !c.pass();
  EXPECT_TRUE(any_fail);
}

}  // namespace
