#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qtrunc {

using Exponent = std::int64_t;
using Rational = mpq_class;

/// A Laurent polynomial in one variable q with exact rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two values
/// compare equal exactly when their term lists are equal. Values are
/// immutable once built; every operation returns a fresh canonical value.
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// Builds from arbitrary terms: sorts, merges repeated exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(const Rational& coeff, Exponent exp);
  static LaurentPoly q_power(Exponent exp) { return monomial(Rational(1), exp); }
  /// 1 - c q^e, the generic Pochhammer factor.
  static LaurentPoly one_minus(const Rational& coeff, Exponent exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when every coefficient is an integer.
  bool is_integral() const;
  std::size_t size() const { return terms_.size(); }

  // Defined for nonzero values only.
  Exponent degree() const;
  Exponent valuation() const;
  const Rational& leading_coefficient() const;
  const Rational& trailing_coefficient() const;

  Rational coefficient(Exponent exp) const;
  std::span<const Term> terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^shift.
  LaurentPoly shifted(Exponent shift) const;
  LaurentPoly scaled(const Rational& factor) const;
  /// Substitute q -> 1/q: every exponent e becomes -e.
  LaurentPoly subst_qinv() const;
  LaurentPoly pow(unsigned exponent) const;

  /// Total ordering (degree-lexicographic on terms); used for map keys only.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

/// Exact quotient a / b in the Laurent ring; throws NotDivisibleError if b does
/// not divide a, ZeroDivisionError if b is zero.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd over the rationals, normalized to valuation 0. gcd(p, 0) is the
/// normalized p. Throws DomainError when both arguments are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Divides by the leading coefficient and by q^valuation. Zero stays zero.
LaurentPoly normalized(const LaurentPoly& p);

/// Ascending-exponent text form, e.g. "1 - 2q^-1 + 3/2*q^3".
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Renders a rational as "a" or "a/b".
std::string to_string(const Rational& r);

}  // namespace qtrunc
