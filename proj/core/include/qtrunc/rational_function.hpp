#pragma once

#include <iosfwd>
#include <string>

#include "qtrunc/laurent_poly.hpp"

namespace qtrunc {

/// Reduced quotient num/den of two Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit, den has valuation 0 and leading
/// coefficient 1. A zero value is stored as 0/1. Because the form is
/// canonical, equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws ZeroDivisionError if den is zero.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction subst_qinv() const;
  /// Integer power; negative exponents invert.
  RationalFunction pow(long exponent) const;

  /// Checks the canonical-form invariant; used by tests.
  bool is_canonical() const;

 private:
  struct Reduced {};
  RationalFunction(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction from_coprime(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_;
};

/// The Laurent polynomial value; throws NotPolynomialError if the
/// denominator is not constant.
LaurentPoly to_poly(const RationalFunction& f);

std::string to_string(const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace qtrunc
