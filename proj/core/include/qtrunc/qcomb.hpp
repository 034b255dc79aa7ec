#pragma once

#include <cstddef>
#include <utility>

#include "qtrunc/laurent_poly.hpp"
#include "qtrunc/rational_function.hpp"

namespace qtrunc {

/// The monomial a = coeff * q^exp used as the base of (a;q)_n.
class MonomialBase {
 public:
  /// Throws DomainError for a zero coefficient.
  MonomialBase(Rational coeff, Exponent exp);

  /// -q^exp, the base family appearing throughout the truncated identities.
  static MonomialBase minus_q(Exponent exp = 1) { return {Rational(-1), exp}; }
  static MonomialBase q_pow(Exponent exp = 1) { return {Rational(1), exp}; }

  const Rational& coeff() const { return coeff_; }
  Exponent exp() const { return exp_; }
  /// a * q^shift
  MonomialBase times_q(Exponent shift) const { return {coeff_, exp_ + shift}; }
  LaurentPoly as_poly() const { return LaurentPoly::monomial(coeff_, exp_); }

  friend bool operator==(const MonomialBase&, const MonomialBase&) = default;

 private:
  Rational coeff_;
  Exponent exp_;
};

/// x(x-1)/2 for any integer x (so binom2(0) = binom2(1) = 0, binom2(-1) = 1).
constexpr Exponent binom2(Exponent x) { return x * (x - 1) / 2; }

/// Gaussian binomial coefficient [n over m]; zero unless 0 <= m <= n.
/// Results are memoized.
LaurentPoly qbinom(long n, long m);

/// (a;q)_n for any integer n. Negative n uses (a;q)_{-d} = 1/(a q^{-d};q)_d and
/// throws ZeroDivisionError when one of those factors vanishes identically.
RationalFunction qpoch(const MonomialBase& a, long n);

/// (a;q)_n as a polynomial, n >= 0.
LaurentPoly qpoch_poly(const MonomialBase& a, long n);

/// p * (a;q)_n for n >= 0, multiplied in factor by factor.
LaurentPoly mul_qpoch(LaurentPoly p, const MonomialBase& a, long n);

template <class Lhs, class Rhs>
struct LawSides {
  Lhs lhs;
  Rhs rhs;
  bool holds() const { return lhs == rhs; }
};

/// ([n over m] with q -> 1/q, q^{m(m-n)} [n over m]).
LawSides<LaurentPoly, LaurentPoly> qbinom_qinv_law(long n, long m);

/// ((-q^{-1};q^{-1})_n, q^{-binom(n+1,2)} (-q;q)_n); n >= 0.
LawSides<LaurentPoly, LaurentPoly> qpoch_qinv_law(long n);

/// Both sides of
///   [2n-r+1 over r] (1-q^{2n+1})/(1-q^{2n-r+1}) = [2n-r over r-1] + q^r [2n-r+1 over r]
/// for 1 <= r <= n.
LawSides<RationalFunction, LaurentPoly> pascal_variant(long n, long r);

struct CacheStats {
  std::size_t entries = 0;
  std::size_t terms = 0;
};

/// Snapshot of the memo tables; used by tests and benchmarks.
CacheStats qcomb_cache_stats();
void qcomb_clear_caches();

}  // namespace qtrunc
