#include "qtrunc/recurrence.hpp"

#include <algorithm>
#include <map>

#include "qtrunc/errors.hpp"

namespace qtrunc {

LaurentPoly AffineProduct::at(long n) const {
  LaurentPoly out(1L);
  for (const auto& factor : factors) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(factor.size());
    for (const auto& m : factor) terms.emplace_back(m.n_mult * n + m.offset, Rational(m.coeff));
    out *= LaurentPoly::from_terms(std::move(terms));
  }
  return out;
}

namespace {

using F = std::vector<AffineMonomial>;

// 1 + s*q^(n + b)
F binomial(long b, long s = 1) { return {{1, 0, 0}, {s, 1, b}}; }
// -1 + q^(a*n + b)
F minus_one_plus(long a, long b) { return {{-1, 0, 0}, {1, a, b}}; }
F monomial(long c, long a, long b) { return {{c, a, b}}; }

std::vector<Recurrence> build() {
  std::vector<Recurrence> out;

  out.push_back({"REC-U2",
                 ClosedForm::U2,
                 {
                     AffineProduct{{monomial(-1, 6, 8)}},
                     AffineProduct{{F{}}},
                     AffineProduct{{monomial(1, 0, 0)}},
                 }});

  out.push_back({"REC-U3",
                 ClosedForm::U3,
                 {
                     AffineProduct{{monomial(1, 9, 12)}},
                     AffineProduct{{F{}}},
                     AffineProduct{{monomial(1, 0, 0)}},
                 }});

  out.push_back({"REC-W2",
                 ClosedForm::W2,
                 {
                     AffineProduct{{monomial(-1, 9, 11), binomial(3)}},
                     AffineProduct{{monomial(-1, 6, 10), binomial(3)}},
                     AffineProduct{{monomial(1, 3, 7), binomial(1)}},
                     AffineProduct{{binomial(1)}},
                 }});

  out.push_back({"REC-W3",
                 ClosedForm::W3,
                 {
                     AffineProduct{{monomial(-1, 15, 24), binomial(2), minus_one_plus(1, 3), binomial(3), binomial(4),
                                    F{{-1, 0, 0}, {-2, 1, 2}, {1, 1, 3}}}},
                     AffineProduct{{monomial(-1, 11, 23), binomial(3), binomial(4),
                                    F{{-1, 0, 0},  {1, 0, 1},   {-2, 1, 2},  {-2, 1, 3},  {2, 1, 4},
                                      {-6, 2, 4},  {6, 2, 5},   {-1, 2, 6},  {-1, 2, 7},  {2, 3, 7},
                                      {3, 3, 8},   {-2, 3, 9},  {-1, 3, 10}, {5, 4, 9},   {-2, 4, 10},
                                      {-3, 4, 11}, {2, 4, 12},  {-2, 5, 12}, {2, 5, 13}}}},
                     AffineProduct{{monomial(1, 6, 18), binomial(1), binomial(4), minus_one_plus(2, 5),
                                    F{{1, 0, 0},
                                      {2, 1, 1},
                                      {-1, 1, 3},
                                      {7, 2, 3},
                                      {-6, 2, 4},
                                      {-2, 2, 5},
                                      {1, 2, 6},
                                      {2, 3, 6},
                                      {-1, 3, 8},
                                      {1, 4, 10}}}},
                     AffineProduct{{monomial(1, 2, 8), binomial(1), binomial(2),
                                    F{{-2, 0, 0},  {2, 0, 1},   {5, 1, 2},   {-2, 1, 3},  {-3, 1, 4},
                                      {2, 1, 5},   {2, 2, 5},   {3, 2, 6},   {-2, 2, 7},  {-1, 2, 8},
                                      {-6, 3, 7},  {6, 3, 8},   {-1, 3, 9},  {-1, 3, 10}, {-2, 4, 10},
                                      {-2, 4, 11}, {2, 4, 12},  {-1, 5, 13}, {1, 5, 14}}}},
                     AffineProduct{{binomial(1), minus_one_plus(1, 2), binomial(2), binomial(3),
                                    F{{2, 0, 0}, {-1, 0, 1}, {1, 1, 3}}}},
                 }});
  return out;
}

}  // namespace

const std::vector<Recurrence>& recurrences() {
  static const std::vector<Recurrence> table = build();
  return table;
}

const Recurrence& find_recurrence(std::string_view id) {
  const auto& all = recurrences();
  auto it = std::find_if(all.begin(), all.end(), [&](const Recurrence& r) { return r.id == id; });
  if (it == all.end()) throw DomainError("unknown recurrence: " + std::string(id));
  return *it;
}

std::vector<RecurrenceCheck> verify_recurrence(const Recurrence& rec, const Sequence& seq, long n_lo, long n_hi) {
  std::map<long, RationalFunction> values;
  auto value = [&](long n) -> const RationalFunction& {
    auto it = values.find(n);
    if (it == values.end()) it = values.emplace(n, seq(n)).first;
    return it->second;
  };
  std::vector<RecurrenceCheck> out;
  for (long n = n_lo; n <= n_hi; ++n) {
    RationalFunction residual;
    for (long i = 0; i <= rec.order(); ++i) {
      const LaurentPoly c = rec.coefficient(i, n);
      if (!c.is_zero()) residual += RationalFunction(c) * value(n + i);
    }
    out.push_back({rec.id, n, std::move(residual)});
  }
  return out;
}

}  // namespace qtrunc
