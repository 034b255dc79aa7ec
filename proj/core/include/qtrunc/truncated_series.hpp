#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qtrunc/laurent_poly.hpp"

namespace qtrunc {

/// A power series in q known exactly through q^order.
///
/// Arithmetic between series of different orders truncates to the smaller
/// order, so a result never claims more precision than its inputs carry.
class TruncatedSeries {
 public:
  /// The zero series through q^order; throws DomainError for order < 0.
  explicit TruncatedSeries(long order);
  /// Throws DomainError if p has a negative exponent.
  static TruncatedSeries from_poly(const LaurentPoly& p, long order);
  static TruncatedSeries one(long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& operator[](long exp) const { return coeffs_.at(static_cast<std::size_t>(exp)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(long order) const;
  /// The known coefficients as a polynomial (drops the error term).
  LaurentPoly to_poly() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; throws DomainError if the constant term is zero.
TruncatedSeries inverse(const TruncatedSeries& a);

/// prod_{k>=1} (1 + sign q^k): sign -1 gives (q;q)_inf, sign +1 gives (-q;q)_inf.
/// Only factors with k <= order are multiplied in.
TruncatedSeries euler_product(int sign, long order);

/// prod_{k>=0} (1 - coeff q^{start + k*step}), truncated; start, step >= 1.
TruncatedSeries infinite_product(const Rational& coeff, long start, long step, long order);

/// 1 + 2 sum_{k>=1} (-1)^k q^{k^2}.
TruncatedSeries theta_gauss(long order);

/// sum_k (-1)^k q^{k(3k+1)/2} over all integers k.
TruncatedSeries pentagonal_sum(long order);

/// Both sides of the Guo-Zeng truncated theta identity at L >= 1:
///   (-q;q)_inf/(q;q)_inf sum_{|k|<=L} (-1)^k q^{k^2}
///   = 1 + (-1)^L sum_{n>L} q^{(L+1)n} (-q;q)_L (-1;q)_{n-L} [n-1 over L] / (q;q)_n.
std::pair<TruncatedSeries, TruncatedSeries> gz_identity_check(long L, long order);

struct EulerExponentialSides {
  TruncatedSeries series_sum;   // sum_r (-1)^r q^{binom(r+1,2)} / (q;q)_r
  TruncatedSeries product;      // (q;q)_inf
  TruncatedSeries middle_form;  // (q^2;q^2)_inf / (-q;q)_inf
  bool holds() const { return series_sum == product && middle_form == product; }
};
EulerExponentialSides euler_exponential_check(long order);

/// Polynomial text followed by " + O(q^{order+1})".
std::string to_string(const TruncatedSeries& s);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace qtrunc
