#include <gtest/gtest.h>

#include <functional>

#include "oracle.hpp"
#include "qtrunc/catalog.hpp"
#include "qtrunc/errors.hpp"
#include "qtrunc/multisum.hpp"
#include "qtrunc/qcomb.hpp"

namespace {

using qtrunc::ClosedForm;
using qtrunc::GzKind;
using qtrunc::LaurentPoly;
using qtrunc::Rational;
using qtrunc::RationalFunction;

LaurentPoly q(long e = 1) { return LaurentPoly::q_power(e); }

using Link = std::function<mpq_class(long a, long b, const mpq_class& q0)>;

// Sums prod_k link(r_k, r_{k+1}) over the box by listing every tuple and
// visiting them in a shuffled order.
mpq_class enumerate_box(long m, long lo, long hi, const Link& link, const mpq_class& q0, std::uint64_t seed) {
  std::vector<std::vector<long>> tuples;
  std::vector<long> r(static_cast<std::size_t>(m), lo);
  for (;;) {
    tuples.push_back(r);
    long k = 0;
    while (k < m && r[static_cast<std::size_t>(k)] == hi) r[static_cast<std::size_t>(k++)] = lo;
    if (k == m) break;
    ++r[static_cast<std::size_t>(k)];
  }
  oracle::Rng rng(seed);
  rng.shuffle(tuples.begin(), tuples.end());
  mpq_class acc = 0;
  for (const auto& t : tuples) {
    mpq_class term = 1;
    for (long k = 0; k < m && term != 0; ++k)
      term *= link(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % m)], q0);
    acc += term;
  }
  return acc;
}

Link u_link(long n, long top_offset) {
  return [n, top_offset](long a, long b, const mpq_class& q0) -> mpq_class {
    const mpq_class bin = oracle::qbin(q0, 2 * n - a + top_offset, b);
    if (bin == 0) return 0;
    return oracle::sign(a) * oracle::power(q0, oracle::binom2(a)) * oracle::poch(-1, 1, q0, n - a) * bin;
  };
}

Link gz_link(long L, GzKind kind) {
  return [L, kind](long a, long b, const mpq_class& q0) -> mpq_class {
    const long extra = (kind == GzKind::Pent1) ? 0 : 1;
    const mpq_class bin = oracle::qbin(q0, 2 * L - a + extra, L + b);
    if (bin == 0) return 0;
    const long e = a * b + (kind == GzKind::Pent1 ? oracle::binom2(a + 1) : oracle::binom2(a));
    return oracle::sign(a) * oracle::power(q0, e) * bin;
  };
}

const std::vector<mpq_class>& sample_points() {
  static const std::vector<mpq_class> points{mpq_class(2), mpq_class(-3, 2)};
  return points;
}

TEST(Multisum, Examples) {
  EXPECT_EQ(qtrunc::wm(2, 1), RationalFunction(-q()));
  EXPECT_EQ(qtrunc::um(3, 2), RationalFunction(q(12).scaled(Rational(1, 2))));
  EXPECT_EQ(qtrunc::wm(3, 1), RationalFunction((q().scaled(3) - q(3)).scaled(Rational(1, 2))));
  EXPECT_EQ(qtrunc::wm(3, 2), RationalFunction((q(6) - q(8).scaled(3)).scaled(Rational(1, 2))));
  EXPECT_TRUE(qtrunc::um(2, 3).is_zero());
}

TEST(Multisum, ClosedFormExamples) {
  EXPECT_TRUE(qtrunc::closed_form(ClosedForm::U2, 7).is_zero());
  EXPECT_TRUE(qtrunc::closed_form(ClosedForm::U3, 3).is_zero());
  EXPECT_EQ(qtrunc::closed_form(ClosedForm::W2, 4), RationalFunction(q(22)));
  EXPECT_THROW(qtrunc::closed_form(ClosedForm::W2, 0), qtrunc::DomainError);
}

TEST(Multisum, ArityOneIsTheSingleSum) {
  const auto& u = qtrunc::catalog().find("JOUHET-U");
  const auto& w = qtrunc::catalog().find("LIU-W");
  for (long n = 1; n <= 12; ++n) {
    EXPECT_EQ(qtrunc::um(1, n), RationalFunction(u.lhs(n))) << n;
    EXPECT_EQ(qtrunc::wm(1, n), RationalFunction(w.lhs(n))) << n;
  }
}

TEST(Multisum, MatchesShuffledEnumeration) {
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= (m == 3 ? 4 : 6); ++n) {
      for (const auto& q0 : sample_points()) {
        const auto seed = static_cast<std::uint64_t>(1000 * m + n);
        EXPECT_EQ(oracle::at(qtrunc::um(m, n), q0), enumerate_box(m, 0, 2 * n + 1, u_link(n, 1), q0, seed)) << m << " " << n;
        EXPECT_EQ(oracle::at(qtrunc::wm(m, n), q0), enumerate_box(m, 0, 2 * n, u_link(n, 0), q0, seed + 7)) << m << " " << n;
      }
    }
  }
}

TEST(Multisum, ArityFourMatchesEnumeration) {
  for (long n = 1; n <= 2; ++n) {
    const mpq_class q0(2);
    EXPECT_EQ(oracle::at(qtrunc::um(4, n), q0), enumerate_box(4, 0, 2 * n + 1, u_link(n, 1), q0, 77));
    EXPECT_EQ(oracle::at(qtrunc::wm(4, n), q0), enumerate_box(4, 0, 2 * n, u_link(n, 0), q0, 78));
  }
}

TEST(Multisum, EnumerationOrderDoesNotMatter) {
  const mpq_class q0(3, 2);
  const mpq_class a = enumerate_box(3, 0, 7, u_link(3, 1), q0, 1);
  const mpq_class b = enumerate_box(3, 0, 7, u_link(3, 1), q0, 2);
  EXPECT_EQ(a, b);
}

TEST(Multisum, DenominatorsArePowersOfTwo) {
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= 6; ++n) {
      for (const auto& v : {qtrunc::um(m, n), qtrunc::wm(m, n)}) {
        EXPECT_TRUE(v.is_polynomial());
        const LaurentPoly p = qtrunc::to_poly(v);
        for (const auto& [e, c] : p.terms()) EXPECT_TRUE(c.get_den() == 1 || c.get_den() == 2) << m << " " << n;
      }
    }
  }
}

TEST(Multisum, ClosedFormsHold) {
  for (auto which : {ClosedForm::U2, ClosedForm::U3, ClosedForm::W2, ClosedForm::W3})
    for (long n = 1; n <= 6; ++n)
      EXPECT_EQ(qtrunc::closed_form_sequence(which, n), qtrunc::closed_form(which, n)) << qtrunc::to_string(which) << " " << n;
}

TEST(Multisum, GuoZengExamples) {
  EXPECT_EQ(qtrunc::gz_multisum(GzKind::Pent1, 3, 2), RationalFunction(7L));
  EXPECT_EQ(qtrunc::gz_multisum(GzKind::Pent1, 2, 3), RationalFunction(1L));
  EXPECT_EQ(qtrunc::gz_multisum(GzKind::Pent2, 3, 1), RationalFunction(-5L));
  EXPECT_EQ(qtrunc::gz_multisum(GzKind::Pent2, 2, 2), RationalFunction(-1L));
}

TEST(Multisum, GuoZengMatchesPredictionAndEnumeration) {
  for (auto kind : {GzKind::Pent1, GzKind::Pent2}) {
    for (long m = 1; m <= 3; ++m) {
      for (long L = 0; L <= 3; ++L) {
        const RationalFunction v = qtrunc::gz_multisum(kind, m, L);
        EXPECT_EQ(v, RationalFunction(qtrunc::gz_rhs(kind, m, L)));
        const long hi = (kind == GzKind::Pent1) ? 2 * L : 2 * L + 1;
        EXPECT_EQ(oracle::at(v, 2), enumerate_box(m, -L, hi, gz_link(L, kind), 2, 5));
      }
    }
  }
}

TEST(Multisum, GuoZengPredictionValues) {
  // 1 | 3L+1 for the first sum, (-1)^{floor(m^2/3)} | (-1)^{m/3}(3L+2) for the second.
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent1, 1, 4), LaurentPoly(1L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent1, 6, 4), LaurentPoly(13L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 1, 4), LaurentPoly(1L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 2, 4), LaurentPoly(-1L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 4, 4), LaurentPoly(-1L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 5, 4), LaurentPoly(1L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 3, 4), LaurentPoly(-14L));
  EXPECT_EQ(qtrunc::gz_rhs(GzKind::Pent2, 6, 4), LaurentPoly(14L));
}

TEST(Multisum, PreconditionsAreChecked) {
  EXPECT_THROW(qtrunc::um(0, 1), qtrunc::DomainError);
  EXPECT_THROW(qtrunc::wm(1, 0), qtrunc::DomainError);
  EXPECT_THROW(qtrunc::gz_multisum(GzKind::Pent1, 1, -1), qtrunc::DomainError);
}

TEST(Multisum, CustomSpec) {
  // Links [3 over b] q^a close into (sum_r q^r [3 over r])^2, which is 64 at q = 1.
  qtrunc::MultiSumSpec spec;
  spec.name = "toy";
  spec.arity = 2;
  spec.lo = [](long) { return 0L; };
  spec.hi = [](long) { return 3L; };
  spec.binomial = [](long, long, long b) { return qtrunc::qbinom(3, b); };
  spec.weight = [](long, long a, long) { return RationalFunction(LaurentPoly::q_power(a)); };
  const RationalFunction v = qtrunc::eval_multisum(spec, 0);
  EXPECT_EQ(oracle::at(v, 1), 64);
  EXPECT_EQ(oracle::at(v, 2), enumerate_box(2, 0, 3, [](long a, long b, const mpq_class& q0) -> mpq_class {
              return oracle::qbin(q0, 3, b) * oracle::power(q0, a);
            }, 2, 9));
}

}  // namespace
