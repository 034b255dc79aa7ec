#include "qtrunc/laurent_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "qtrunc/errors.hpp"

namespace qtrunc {
namespace {

using Term = LaurentPoly::Term;

bool is_integer(const Rational& c) { return mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) == 0; }

// Dense integer polynomial, index = exponent offset from the valuation.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Common denominator of the coefficients.
mpz_class denominator_lcm(std::span<const Term> terms) {
  mpz_class l = 1;
  for (const auto& [e, c] : terms) {
    if (!is_integer(c)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.get_mpq_t()));
  }
  return l;
}

// Dense integer image of (p * scale) / q^valuation(p).
IntPoly to_dense_integral(std::span<const Term> terms, const mpz_class& scale) {
  const Exponent v = terms.front().first;
  IntPoly out(static_cast<std::size_t>(terms.back().first - v + 1));
  for (const auto& [e, c] : terms) {
    mpz_class& slot = out[static_cast<std::size_t>(e - v)];
    if (scale == 1) {
      slot = c.get_num();
    } else {
      mpz_divexact(slot.get_mpz_t(), scale.get_mpz_t(), mpq_denref(c.get_mpq_t()));
      slot *= c.get_num();
    }
  }
  return out;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of f by g (both nonempty, trimmed); result trimmed.
IntPoly pseudo_remainder(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  const mpz_class& lg = g.back();
  const bool unit_lead = (lg == 1 || lg == -1);
  while (f.size() >= g.size()) {
    const mpz_class lf = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (unit_lead) {
      const mpz_class factor = lf * lg;  // lf / lg
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (sgn(g[i]) != 0) mpz_submul(f[shift + i].get_mpz_t(), factor.get_mpz_t(), g[i].get_mpz_t());
      }
    } else {
      for (auto& c : f) c *= lg;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (sgn(g[i]) != 0) mpz_submul(f[shift + i].get_mpz_t(), lf.get_mpz_t(), g[i].get_mpz_t());
      }
    }
    trim(f);
    if (!unit_lead && !f.empty()) {
      mpz_class c = content(f);
      if (c != 1) {
        for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  return f;
}

LaurentPoly from_dense(const IntPoly& p, Exponent valuation, const mpz_class& denominator) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    Rational c(p[i], denominator);
    if (denominator != 1) c.canonicalize();
    out.emplace_back(valuation + static_cast<Exponent>(i), std::move(c));
  }
  return LaurentPoly::from_terms(std::move(out));
}

std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t max_bits(const IntPoly& p) {
  std::size_t m = 0;
  for (const auto& c : p) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

// Packs p(2^(64*limbs)) into one integer; coefficients may be negative.
mpz_class kronecker_pack(const IntPoly& p, std::size_t limbs) {
  std::vector<mp_limb_t> pos(p.size() * limbs, 0);
  std::vector<mp_limb_t> neg(p.size() * limbs, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int s = sgn(p[i]);
    if (s == 0) continue;
    std::size_t count = 0;
    mpz_export((s > 0 ? pos : neg).data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, p[i].get_mpz_t());
  }
  mpz_class a;
  mpz_class b;
  mpz_import(a.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  mpz_import(b.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
  return a - b;
}

// Inverse of kronecker_pack for `count` coefficients, each of absolute value
// below 2^(64*limbs - 2).
IntPoly kronecker_unpack(const mpz_class& packed, std::size_t limbs, std::size_t count) {
  IntPoly out(count);
  const int s = sgn(packed);
  if (s == 0) return out;
  std::vector<mp_limb_t> buf(count * limbs + 1, 0);
  std::size_t written = 0;
  mpz_export(buf.data(), &written, -1, sizeof(mp_limb_t), 0, 0, packed.get_mpz_t());
  const std::size_t slot_bits = limbs * GMP_NUMB_BITS;
  mpz_class half;
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, slot_bits);
  half = full / 2;
  bool carry = false;
  mpz_class d;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_import(d.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    if (carry) d += 1;
    carry = d >= half;
    if (carry) d -= full;
    out[i] = s > 0 ? d : mpz_class(-d);
  }
  return out;
}

// Product of dense integer polynomials through one big-integer multiplication.
IntPoly kronecker_mul(const IntPoly& a, const IntPoly& b) {
  std::size_t len_bits = 1;
  while ((std::size_t{1} << len_bits) < std::min(a.size(), b.size())) ++len_bits;
  const std::size_t bits = max_bits(a) + max_bits(b) + len_bits + 2;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  const mpz_class product = kronecker_pack(a, limbs) * kronecker_pack(b, limbs);
  return kronecker_unpack(product, limbs, a.size() + b.size() - 1);
}

// Multiplication where one side has only a handful of terms: shifted copies
// of the large operand, accumulated by merging.
std::vector<Term> mul_by_few(std::span<const Term> big, std::span<const Term> few) {
  std::vector<Term> acc;
  for (const auto& [e, c] : few) {
    std::vector<Term> part;
    part.reserve(big.size());
    for (const auto& [be, bc] : big) part.emplace_back(be + e, bc * c);
    acc = acc.empty() ? std::move(part) : merge_add(acc, part, false);
  }
  return acc;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, Exponent exp) {
  if (sgn(coeff) == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, coeff}});
}

LaurentPoly LaurentPoly::one_minus(const Rational& coeff, Exponent exp) {
  return from_terms({{0, Rational(1)}, {exp, Rational(-coeff)}});
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.second); });
}

Exponent LaurentPoly::degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.back().first;
}

Exponent LaurentPoly::valuation() const {
  if (terms_.empty()) throw DomainError("valuation of the zero polynomial");
  return terms_.front().first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.back().second;
}

const Rational& LaurentPoly::trailing_coefficient() const {
  if (terms_.empty()) throw DomainError("trailing coefficient of the zero polynomial");
  return terms_.front().second;
}

Rational LaurentPoly::coefficient(Exponent exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Rational(0);
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out(terms_);
  for (auto& t : out) t.second = -t.second;
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  terms_ = merge_add(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_add(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  constexpr std::size_t kFewTerms = 4;
  if (rhs.size() <= kFewTerms || lhs.size() <= kFewTerms) {
    const bool rhs_small = rhs.size() <= lhs.size();
    return LaurentPoly(mul_by_few(rhs_small ? lhs.terms_ : rhs.terms_, rhs_small ? rhs.terms_ : lhs.terms_));
  }

  const mpz_class da = denominator_lcm(lhs.terms_);
  const mpz_class db = denominator_lcm(rhs.terms_);
  const IntPoly a = to_dense_integral(lhs.terms_, da);
  const IntPoly b = to_dense_integral(rhs.terms_, db);
  const Exponent v = lhs.valuation() + rhs.valuation();
  const mpz_class den = da * db;

  const std::size_t span = a.size() + b.size() - 1;
  const std::size_t work = lhs.size() * rhs.size();
  constexpr std::size_t kKroneckerMin = 24;
  if (std::min(a.size(), b.size()) >= kKroneckerMin && span <= 8 * work) {
    return from_dense(kronecker_mul(a, b), v, den);
  }
  if (span <= 8 * work) {
    IntPoly out(span);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      mpz_srcptr ai = a[i].get_mpz_t();
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (sgn(b[j]) != 0) mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
      }
    }
    return from_dense(out, v, den);
  }

  std::unordered_map<Exponent, mpz_class> acc;
  acc.reserve(work);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) mpz_addmul(acc[static_cast<Exponent>(i + j)].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (sgn(c) == 0) continue;
    Rational r(c, den);
    r.canonicalize();
    out.emplace_back(v + e, std::move(r));
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  std::vector<Term> out(terms_);
  for (auto& t : out) t.first += shift;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Rational& factor) const {
  if (sgn(factor) == 0) return {};
  std::vector<Term> out(terms_);
  for (auto& t : out) t.second *= factor;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::subst_qinv() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.first = -t.first;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& [ea, ca] = a.terms_[i];
    const auto& [eb, cb] = b.terms_[i];
    if (ea != eb) return ea < eb;
    const int c = cmp(ca, cb);
    if (c != 0) return c < 0;
  }
  return false;
}

std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    return a.shifted(-b.valuation()).scaled(Rational(1) / b.leading_coefficient());
  }
  const Exponent va = a.valuation();
  const Exponent vb = b.valuation();
  const Exponent deg_a = a.degree() - va;
  const Exponent deg_b = b.degree() - vb;
  if (deg_a < deg_b) return std::nullopt;

  const auto a_terms = a.terms();
  const auto b_terms = b.terms();
  const std::size_t qlen = static_cast<std::size_t>(deg_a - deg_b + 1);

  const bool integral = a.is_integral() && b.is_integral() && abs(b.leading_coefficient()) == 1;
  if (integral) {
    IntPoly rem = to_dense_integral(a_terms, mpz_class(1));
    IntPoly quot(qlen);
    const bool neg_lead = sgn(b.leading_coefficient()) < 0;
    for (std::size_t k = qlen; k-- > 0;) {
      mpz_class& top = rem[k + static_cast<std::size_t>(deg_b)];
      if (sgn(top) == 0) continue;
      mpz_class c = neg_lead ? mpz_class(-top) : top;
      for (const auto& [e, bc] : b_terms) {
        mpz_submul(rem[k + static_cast<std::size_t>(e - vb)].get_mpz_t(), c.get_mpz_t(), bc.get_num_mpz_t());
      }
      quot[k] = std::move(c);
    }
    for (std::size_t k = 0; k < static_cast<std::size_t>(deg_b); ++k) {
      if (sgn(rem[k]) != 0) return std::nullopt;
    }
    return from_dense(quot, va - vb, mpz_class(1));
  }

  std::vector<Rational> rem(static_cast<std::size_t>(deg_a + 1));
  for (const auto& [e, c] : a_terms) rem[static_cast<std::size_t>(e - va)] = c;
  std::vector<Term> quot;
  const Rational& lead = b.leading_coefficient();
  for (std::size_t k = qlen; k-- > 0;) {
    const Rational& top = rem[k + static_cast<std::size_t>(deg_b)];
    if (sgn(top) == 0) continue;
    Rational c = top / lead;
    for (const auto& [e, bc] : b_terms) rem[k + static_cast<std::size_t>(e - vb)] -= c * bc;
    quot.emplace_back(static_cast<Exponent>(k) + va - vb, std::move(c));
  }
  for (std::size_t k = 0; k < static_cast<std::size_t>(deg_b); ++k) {
    if (sgn(rem[k]) != 0) return std::nullopt;
  }
  return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divexact(a, b);
  if (!q) throw NotDivisibleError("polynomial division leaves a nonzero remainder: (" + to_string(a) + ") / (" + to_string(b) + ")");
  return *std::move(q);
}

LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.valuation()).scaled(Rational(1) / p.leading_coefficient());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1L);

  IntPoly f = to_dense_integral(a.terms(), denominator_lcm(a.terms()));
  IntPoly g = to_dense_integral(b.terms(), denominator_lcm(b.terms()));
  make_primitive(f);
  make_primitive(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (g.size() > 1) {
    IntPoly r = pseudo_remainder(std::move(f), g);
    f = std::move(g);
    make_primitive(r);
    g = std::move(r);
  }
  if (g.size() == 1) return LaurentPoly(1L);
  return normalized(from_dense(f, 0, mpz_class(1)));
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) {
      os << to_string(mag);
      if (!is_integer(mag)) os << '*';
    }
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace qtrunc
