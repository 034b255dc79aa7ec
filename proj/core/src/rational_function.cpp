#include "qtrunc/rational_function.hpp"

#include <ostream>

#include "qtrunc/errors.hpp"

namespace qtrunc {
namespace {

bool is_one(const LaurentPoly& p) { return p.is_constant() && !p.is_zero() && p.leading_coefficient() == 1; }

LaurentPoly gcd_or_one(const LaurentPoly& a, const LaurentPoly& b) {
  if (is_one(a) || is_one(b)) return LaurentPoly(1L);
  return gcd(a, b);
}

}  // namespace

RationalFunction RationalFunction::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (num.is_zero()) return {};
  const Exponent v = den.valuation();
  const Rational inv_lead = Rational(1) / den.leading_coefficient();
  if (v != 0 || inv_lead != 1) {
    num = num.shifted(-v).scaled(inv_lead);
    den = den.shifted(-v).scaled(inv_lead);
  }
  return {std::move(num), std::move(den), Reduced{}};
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : den_(1L) {
  if (den.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
  if (num.is_zero()) return;
  if (den.is_monomial()) {
    num_ = divexact(num, den);
    return;
  }
  if (auto q = try_divexact(num, den)) {
    num_ = *std::move(q);
    return;
  }
  const LaurentPoly g = gcd(num, den);
  *this = from_coprime(divexact(num, g), divexact(den, g));
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw ZeroDivisionError("inverse of zero");
  return from_coprime(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    LaurentPoly n = num_ + rhs.num_;
    if (is_one(den_) || n.is_zero()) return *this = RationalFunction(std::move(n));
    const LaurentPoly g = gcd(n, den_);
    if (is_one(g)) return *this = from_coprime(std::move(n), den_);
    return *this = from_coprime(divexact(n, g), divexact(den_, g));
  }
  const LaurentPoly g = gcd_or_one(den_, rhs.den_);
  if (is_one(g)) {
    LaurentPoly n = num_ * rhs.den_ + rhs.num_ * den_;
    return *this = from_coprime(std::move(n), den_ * rhs.den_);
  }
  // With both operands reduced, any common factor of the new numerator and
  // denominator divides g.
  const LaurentPoly b = divexact(den_, g);
  const LaurentPoly d = divexact(rhs.den_, g);
  LaurentPoly n = num_ * d + rhs.num_ * b;
  if (n.is_zero()) return *this = RationalFunction();
  LaurentPoly den = den_ * d;
  const LaurentPoly g2 = gcd(n, g);
  if (!is_one(g2)) {
    n = divexact(n, g2);
    den = divexact(den, g2);
  }
  return *this = from_coprime(std::move(n), std::move(den));
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
  const LaurentPoly g1 = gcd_or_one(num_, rhs.den_);
  const LaurentPoly g2 = gcd_or_one(rhs.num_, den_);
  LaurentPoly n = (is_one(g1) ? num_ : divexact(num_, g1)) * (is_one(g2) ? rhs.num_ : divexact(rhs.num_, g2));
  LaurentPoly d = (is_one(g2) ? den_ : divexact(den_, g2)) * (is_one(g1) ? rhs.den_ : divexact(rhs.den_, g1));
  return *this = from_coprime(std::move(n), std::move(d));
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

RationalFunction RationalFunction::subst_qinv() const { return from_coprime(num_.subst_qinv(), den_.subst_qinv()); }

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return from_coprime(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
}

bool RationalFunction::is_canonical() const {
  if (den_.is_zero()) return false;
  if (num_.is_zero()) return is_one(den_);
  if (den_.valuation() != 0 || den_.leading_coefficient() != 1) return false;
  return is_one(gcd(num_, den_));
}

LaurentPoly to_poly(const RationalFunction& f) {
  if (!f.is_polynomial()) throw NotPolynomialError("value is not a Laurent polynomial: " + to_string(f));
  return f.num();
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_string(f); }

}  // namespace qtrunc
