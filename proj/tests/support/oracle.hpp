#pragma once

// Reference implementations used only by tests. Nothing here calls into the
// library's arithmetic: polynomials are plain exponent maps and q-series
// objects are evaluated numerically at a rational point.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "qtrunc/laurent_poly.hpp"
#include "qtrunc/rational_function.hpp"

namespace oracle {

using Coeffs = std::map<long, mpq_class>;

inline void put(Coeffs& c, long e, const mpq_class& v) {
  mpq_class& slot = c[e];
  slot += v;
  if (slot == 0) c.erase(e);
}

inline Coeffs from_poly(const qtrunc::LaurentPoly& p) {
  Coeffs c;
  for (const auto& [e, v] : p.terms()) c[static_cast<long>(e)] = v;
  return c;
}

inline qtrunc::LaurentPoly to_poly(const Coeffs& c) {
  std::vector<qtrunc::LaurentPoly::Term> terms;
  for (const auto& [e, v] : c) terms.emplace_back(e, v);
  return qtrunc::LaurentPoly::from_terms(std::move(terms));
}

/// Schoolbook product, one term pair at a time.
inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  for (const auto& [ea, va] : a)
    for (const auto& [eb, vb] : b) put(out, ea + eb, va * vb);
  return out;
}

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a;
  for (const auto& [e, v] : b) put(out, e, v);
  return out;
}

inline Coeffs shift(const Coeffs& a, long s) {
  Coeffs out;
  for (const auto& [e, v] : a) out[e + s] = v;
  return out;
}

/// Gaussian binomial from the Pascal rule [n,m] = [n-1,m-1] + q^m [n-1,m].
inline Coeffs qbinom_pascal(long n, long m) {
  if (m < 0 || n < 0 || m > n) return {};
  static std::vector<std::vector<Coeffs>> rows{{Coeffs{{0, 1}}}};
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const long r = static_cast<long>(rows.size());
    std::vector<Coeffs> row(static_cast<std::size_t>(r + 1));
    for (long k = 0; k <= r; ++k) {
      Coeffs left = (k >= 1) ? prev[static_cast<std::size_t>(k - 1)] : Coeffs{};
      Coeffs right = (k <= r - 1) ? shift(prev[static_cast<std::size_t>(k)], k) : Coeffs{};
      row[static_cast<std::size_t>(k)] = add(left, right);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

// ---- numeric evaluation at a rational point q0 -------------------------------

inline mpq_class power(const mpq_class& x, long e) {
  mpq_class base = (e < 0) ? mpq_class(1) / x : x;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class acc = 1;
  while (k > 0) {
    if (k & 1U) acc *= base;
    base *= base;
    k >>= 1U;
  }
  return acc;
}

inline mpq_class at(const qtrunc::LaurentPoly& p, const mpq_class& q0) {
  mpq_class acc = 0;
  for (const auto& [e, v] : p.terms()) acc += v * power(q0, static_cast<long>(e));
  return acc;
}

inline mpq_class at(const qtrunc::RationalFunction& f, const mpq_class& q0) {
  const mpq_class d = at(f.den(), q0);
  if (d == 0) throw std::domain_error("denominator vanishes at the sample point");
  return at(f.num(), q0) / d;
}

/// [n over m] at q0 from the product formula.
inline mpq_class qbin(const mpq_class& q0, long n, long m) {
  if (m < 0 || m > n) return 0;
  mpq_class acc = 1;
  for (long i = 1; i <= m; ++i) acc *= (1 - power(q0, n - m + i)) / (1 - power(q0, i));
  return acc;
}

/// (a;q)_n at q0 for any integer n, a = c q^e.
inline mpq_class poch(const mpq_class& c, long e, const mpq_class& q0, long n) {
  mpq_class acc = 1;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) acc *= 1 - c * power(q0, e + k);
    return acc;
  }
  for (long k = 0; k < -n; ++k) acc *= 1 - c * power(q0, e + n + k);
  if (acc == 0) throw std::domain_error("negative-index Pochhammer has a vanishing factor");
  return 1 / acc;
}

inline mpq_class sign(long e) { return (e % 2 == 0) ? 1 : -1; }
inline long binom2(long x) { return x * (x - 1) / 2; }
inline long floor_div(long a, long b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

// ---- random generators with a fixed seed ----------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

  mpq_class rational(long magnitude, bool integral) {
    long num = 0;
    while (num == 0) num = uniform(-magnitude, magnitude);
    if (integral) return num;
    mpq_class r(num, uniform(1, magnitude));
    r.canonicalize();
    return r;
  }

  mpz_class big_integer(int limbs) {
    mpz_class x = 0;
    for (int i = 0; i < limbs; ++i) {
      x <<= 62;
      x += static_cast<unsigned long>(uniform(0, (1L << 62) - 1));
    }
    return coin() ? mpz_class(-x) : x;
  }

  qtrunc::LaurentPoly poly(int max_terms, long exp_lo, long exp_hi, long magnitude = 9, bool integral = false) {
    std::vector<qtrunc::LaurentPoly::Term> terms;
    const long count = uniform(0, max_terms);
    for (long i = 0; i < count; ++i) terms.emplace_back(uniform(exp_lo, exp_hi), rational(magnitude, integral));
    return qtrunc::LaurentPoly::from_terms(std::move(terms));
  }

  qtrunc::LaurentPoly nonzero_poly(int max_terms, long exp_lo, long exp_hi, long magnitude = 9, bool integral = false) {
    for (;;) {
      auto p = poly(max_terms, exp_lo, exp_hi, magnitude, integral);
      if (!p.is_zero()) return p;
    }
  }

  template <class It>
  void shuffle(It first, It last) {
    std::shuffle(first, last, engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
