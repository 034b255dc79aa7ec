#include "qtrunc/truncated_series.hpp"

#include <algorithm>
#include <ostream>

#include "qtrunc/errors.hpp"
#include "qtrunc/qcomb.hpp"

namespace qtrunc {

TruncatedSeries::TruncatedSeries(long order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, long order) {
  TruncatedSeries s(order);
  if (p.is_zero()) return s;
  if (p.valuation() < 0) throw DomainError("cannot embed a polynomial with negative exponents: " + to_string(p));
  for (const auto& [e, c] : p.terms()) {
    if (e > order) break;
    s.coeffs_[static_cast<std::size_t>(e)] = c;
  }
  return s;
}

TruncatedSeries TruncatedSeries::one(long order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(long order) const {
  TruncatedSeries s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

LaurentPoly TruncatedSeries::to_poly() const {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) terms.emplace_back(static_cast<Exponent>(i), coeffs_[i]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(*this);
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  const std::size_t n = s.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(b.coeffs_[j]) != 0) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (sgn(a[0]) == 0) throw DomainError("series with zero constant term is not invertible");
  const long n = a.order();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = Rational(1) / a[0];
  out[0] = inv0;
  for (long k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (long j = 1; j <= k; ++j) {
      if (sgn(a[j]) != 0) acc += a[j] * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  std::vector<LaurentPoly::Term> terms;
  for (long k = 0; k <= n; ++k) terms.emplace_back(k, out[static_cast<std::size_t>(k)]);
  return TruncatedSeries::from_poly(LaurentPoly::from_terms(std::move(terms)), n);
}

TruncatedSeries infinite_product(const Rational& coeff, long start, long step, long order) {
  if (start < 1 || step < 1) throw DomainError("infinite_product needs positive start and step");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (long e = start; e <= order; e += step) {
    // multiply by (1 - coeff q^e), high exponents first so each step reads old values
    for (long i = order; i >= e; --i) {
      const auto idx = static_cast<std::size_t>(i);
      const auto src = static_cast<std::size_t>(i - e);
      if (sgn(c[src]) != 0) c[idx] -= coeff * c[src];
    }
  }
  std::vector<LaurentPoly::Term> terms;
  for (long k = 0; k <= order; ++k) terms.emplace_back(k, c[static_cast<std::size_t>(k)]);
  return TruncatedSeries::from_poly(LaurentPoly::from_terms(std::move(terms)), order);
}

TruncatedSeries euler_product(int sign, long order) {
  if (sign != 1 && sign != -1) throw DomainError("euler_product sign must be +1 or -1");
  return infinite_product(Rational(-sign), 1, 1, order);
}

TruncatedSeries theta_gauss(long order) {
  std::vector<LaurentPoly::Term> terms{{0, Rational(1)}};
  for (long k = 1; k * k <= order; ++k) terms.emplace_back(k * k, Rational(k % 2 == 0 ? 2 : -2));
  return TruncatedSeries::from_poly(LaurentPoly::from_terms(std::move(terms)), order);
}

TruncatedSeries pentagonal_sum(long order) {
  std::vector<LaurentPoly::Term> terms;
  for (long k = 0; k * (3 * k - 1) / 2 <= order; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    if (k * (3 * k + 1) / 2 <= order) terms.emplace_back(k * (3 * k + 1) / 2, sign);
    if (k > 0) terms.emplace_back(k * (3 * k - 1) / 2, sign);
  }
  return TruncatedSeries::from_poly(LaurentPoly::from_terms(std::move(terms)), order);
}

std::pair<TruncatedSeries, TruncatedSeries> gz_identity_check(long L, long order) {
  if (L < 1) throw DomainError("gz_identity_check requires L >= 1");
  std::vector<LaurentPoly::Term> theta;
  for (long k = -L; k <= L; ++k) theta.emplace_back(k * k, Rational(k % 2 == 0 ? 1 : -1));
  const TruncatedSeries lhs = euler_product(+1, order) * inverse(euler_product(-1, order)) *
                              TruncatedSeries::from_poly(LaurentPoly::from_terms(std::move(theta)), order);

  const MonomialBase minus_q = MonomialBase::minus_q();
  const MonomialBase minus_one(Rational(-1), 0);
  const MonomialBase q = MonomialBase::q_pow();
  const LaurentPoly head = qpoch_poly(minus_q, L);
  TruncatedSeries tail(order);
  for (long n = L + 1; (L + 1) * n <= order; ++n) {
    const LaurentPoly numerator = (head * qpoch_poly(minus_one, n - L) * qbinom(n - 1, L)).shifted((L + 1) * n);
    tail = tail + TruncatedSeries::from_poly(numerator, order) * inverse(TruncatedSeries::from_poly(qpoch_poly(q, n), order));
  }
  const TruncatedSeries rhs = TruncatedSeries::one(order) + (L % 2 == 0 ? tail : -tail);
  return {lhs, rhs};
}

EulerExponentialSides euler_exponential_check(long order) {
  TruncatedSeries sum(order);
  const MonomialBase q = MonomialBase::q_pow();
  for (long r = 0; binom2(r + 1) <= order; ++r) {
    const LaurentPoly numerator = LaurentPoly::monomial(Rational(r % 2 == 0 ? 1 : -1), binom2(r + 1));
    sum = sum + TruncatedSeries::from_poly(numerator, order) * inverse(TruncatedSeries::from_poly(qpoch_poly(q, r), order));
  }
  TruncatedSeries middle = infinite_product(Rational(1), 2, 2, order) * inverse(euler_product(+1, order));
  return {std::move(sum), euler_product(-1, order), std::move(middle)};
}

std::string to_string(const TruncatedSeries& s) {
  const LaurentPoly p = s.to_poly();
  const std::string tail = "O(q^" + std::to_string(s.order() + 1) + ")";
  return p.is_zero() ? tail : to_string(p) + " + " + tail;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << to_string(s); }

}  // namespace qtrunc
