#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtrunc/errors.hpp"
#include "qtrunc/qcomb.hpp"
#include "qtrunc/truncated_series.hpp"

namespace {

using qtrunc::LaurentPoly;
using qtrunc::Rational;
using qtrunc::TruncatedSeries;

LaurentPoly q(long e = 1) { return LaurentPoly::q_power(e); }

TruncatedSeries series(std::initializer_list<long> coeffs) {
  std::vector<LaurentPoly::Term> terms;
  long e = 0;
  for (long c : coeffs) terms.emplace_back(e++, Rational(c));
  return TruncatedSeries::from_poly(LaurentPoly::from_terms(terms), static_cast<long>(coeffs.size()) - 1);
}

// p(n) by the standard partition-count table, independent of any series code.
std::vector<mpz_class> partition_numbers(long order) {
  std::vector<mpz_class> p(static_cast<std::size_t>(order + 1), 0);
  p[0] = 1;
  for (long part = 1; part <= order; ++part)
    for (long n = part; n <= order; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

TEST(Series, FromPoly) {
  const TruncatedSeries s = TruncatedSeries::from_poly(LaurentPoly(1L) - q(), 5);
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], -1);
  EXPECT_EQ(s[2], 0);
  EXPECT_THROW(TruncatedSeries::from_poly(q(-1), 5), qtrunc::DomainError);
  EXPECT_EQ(TruncatedSeries::from_poly(qtrunc::qbinom(4, 2), 3), series({1, 1, 2, 1}));
  EXPECT_THROW(TruncatedSeries(-1), qtrunc::DomainError);
}

TEST(Series, MixedOrderTruncates) {
  const TruncatedSeries a = TruncatedSeries::from_poly(LaurentPoly(1L) + q(), 9);
  const TruncatedSeries b = TruncatedSeries::from_poly(LaurentPoly(1L) + q(), 4);
  EXPECT_EQ((a * b).order(), 4);
  EXPECT_EQ((a + b).order(), 4);
  EXPECT_EQ(a * a, series({1, 2, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(a + TruncatedSeries(9), a);
}

TEST(Series, GeometricInverse) {
  const TruncatedSeries inv = qtrunc::inverse(TruncatedSeries::from_poly(LaurentPoly(1L) - q(), 7));
  EXPECT_EQ(inv, series({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(qtrunc::inverse(TruncatedSeries::one(5)), TruncatedSeries::one(5));
  EXPECT_THROW(qtrunc::inverse(TruncatedSeries::from_poly(q(), 4)), qtrunc::DomainError);
  const TruncatedSeries one_minus = TruncatedSeries::from_poly(LaurentPoly(1L) - q(), 7);
  EXPECT_EQ(one_minus * inv, TruncatedSeries::one(7));
}

TEST(Series, InverseIsTwoSidedOnRandomSeries) {
  oracle::Rng rng(0x5eed0101);
  for (int t = 0; t < 60; ++t) {
    LaurentPoly p = rng.poly(6, 1, 12) + LaurentPoly(rng.rational(7, false));
    const long order = rng.uniform(0, 20);
    const TruncatedSeries s = TruncatedSeries::from_poly(p, order);
    const TruncatedSeries inv = qtrunc::inverse(s);
    EXPECT_EQ(s * inv, TruncatedSeries::one(order));
    EXPECT_EQ(inv * s, TruncatedSeries::one(order));
    EXPECT_EQ(qtrunc::inverse(inv), s);
  }
}

TEST(Series, EulerProduct) {
  EXPECT_EQ(qtrunc::euler_product(-1, 8), series({1, -1, -1, 0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(qtrunc::euler_product(+1, 0), TruncatedSeries::one(0));
  const TruncatedSeries eta = qtrunc::euler_product(-1, 40);
  EXPECT_EQ(eta * qtrunc::inverse(eta), TruncatedSeries::one(40));
  for (const auto& c : eta.coefficients()) EXPECT_EQ(c.get_den(), 1);
}

TEST(Series, EulerProductMatchesNumericTruncation) {
  // (-q;q)_inf through q^N equals (-q;q)_N through q^N.
  for (long order : {0L, 1L, 7L, 25L}) {
    EXPECT_EQ(qtrunc::euler_product(+1, order),
              TruncatedSeries::from_poly(oracle::to_poly([&] {
                oracle::Coeffs acc{{0, 1}};
                for (long k = 1; k <= order; ++k) acc = oracle::mul(acc, oracle::Coeffs{{0, 1}, {k, 1}});
                return acc;
              }()), order));
  }
}

TEST(Series, InverseEtaCountsPartitions) {
  const long order = 80;
  const auto p = partition_numbers(order);
  const TruncatedSeries inv = qtrunc::inverse(qtrunc::euler_product(-1, order));
  for (long n = 0; n <= order; ++n) EXPECT_EQ(inv[n], p[static_cast<std::size_t>(n)]) << n;
}

TEST(Series, ThetaGauss) {
  EXPECT_EQ(qtrunc::to_string(qtrunc::theta_gauss(10)), "1 - 2q + 2q^4 - 2q^9 + O(q^11)");
  EXPECT_EQ(qtrunc::theta_gauss(0), TruncatedSeries::one(0));
  const long order = 60;
  const TruncatedSeries product = qtrunc::euler_product(-1, order) * qtrunc::inverse(qtrunc::euler_product(+1, order));
  EXPECT_EQ(qtrunc::theta_gauss(order), product);
  const TruncatedSeries theta = qtrunc::theta_gauss(order);
  for (const auto& c : theta.coefficients()) EXPECT_TRUE(c == 0 || c == 1 || c == -1 || c == 2 || c == -2);
}

TEST(Series, PentagonalSum) {
  EXPECT_EQ(qtrunc::pentagonal_sum(13), series({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0}));
  EXPECT_EQ(qtrunc::pentagonal_sum(1), series({1, -1}));
  EXPECT_EQ(qtrunc::to_string(qtrunc::pentagonal_sum(0)), "1 + O(q^1)");
}

TEST(Series, PentagonalTheoremEveryOrder) {
  for (long order = 0; order <= 120; ++order) EXPECT_EQ(qtrunc::pentagonal_sum(order), qtrunc::euler_product(-1, order)) << order;
}

TEST(Series, GuoZengTruncatedTheta) {
  for (long L = 1; L <= 6; ++L) {
    const auto [lhs, rhs] = qtrunc::gz_identity_check(L, 60);
    EXPECT_EQ(lhs, rhs) << "L=" << L;
    EXPECT_EQ(lhs.order(), 60);
  }
  for (long L = 1; L <= 4; ++L) {
    const auto [lhs, rhs] = qtrunc::gz_identity_check(L, 0);
    EXPECT_EQ(lhs[0], 1);
    EXPECT_EQ(rhs[0], 1);
  }
}

TEST(Series, GuoZengTailStartsAtLPlusOneSquared) {
  // The tail starts at q^{(L+1)^2}, so the partial theta times the product
  // agrees with 1 below that exponent.
  for (long L = 1; L <= 5; ++L) {
    const auto [lhs, rhs] = qtrunc::gz_identity_check(L, (L + 1) * (L + 1));
    for (long e = 1; e < (L + 1) * (L + 1); ++e) EXPECT_EQ(lhs[e], 0) << L << " " << e;
    EXPECT_NE(lhs[(L + 1) * (L + 1)], 0);
  }
}

TEST(Series, EulerExponential) {
  for (long order : {0L, 20L, 40L, 60L}) {
    const auto sides = qtrunc::euler_exponential_check(order);
    EXPECT_TRUE(sides.holds()) << order;
    EXPECT_EQ(sides.product, qtrunc::pentagonal_sum(order));
  }
  const auto zero = qtrunc::euler_exponential_check(0);
  EXPECT_EQ(zero.series_sum, TruncatedSeries::one(0));
}

TEST(Series, RenderedWithErrorTerm) {
  EXPECT_EQ(qtrunc::to_string(TruncatedSeries(3)), "O(q^4)");
  EXPECT_EQ(qtrunc::to_string(qtrunc::euler_product(-1, 8)), "1 - q - q^2 + q^5 + q^7 + O(q^9)");
}

}  // namespace
