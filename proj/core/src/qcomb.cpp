#include "qtrunc/qcomb.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "qtrunc/errors.hpp"

namespace qtrunc {
namespace {

// Memo tables are cleared wholesale once they hold this many terms; a single
// q-binomial near the top of the catalog range has several thousand terms.
constexpr std::size_t kCacheTermBudget = 4'000'000;

template <class Key>
class BoundedMemo {
 public:
  template <class Compute>
  LaurentPoly get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    LaurentPoly value = compute();
    std::lock_guard lock(mutex_);
    if (terms_ + value.size() > kCacheTermBudget) {
      table_.clear();
      terms_ = 0;
    }
    if (table_.emplace(key, value).second) terms_ += value.size();
    return value;
  }

  CacheStats stats() const {
    std::lock_guard lock(mutex_);
    return {table_.size(), terms_};
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
    terms_ = 0;
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, LaurentPoly> table_;
  std::size_t terms_ = 0;
};

struct PochKey {
  Rational coeff;
  Exponent exp;
  long n;
  friend bool operator<(const PochKey& a, const PochKey& b) {
    if (a.exp != b.exp) return a.exp < b.exp;
    if (a.n != b.n) return a.n < b.n;
    return cmp(a.coeff, b.coeff) < 0;
  }
};

BoundedMemo<std::pair<long, long>>& qbinom_memo() {
  static BoundedMemo<std::pair<long, long>> memo;
  return memo;
}

BoundedMemo<PochKey>& qpoch_memo() {
  static BoundedMemo<PochKey> memo;
  return memo;
}

LaurentPoly compute_qbinom(long n, long m) {
  // [n over i+1] = [n over i] (1 - q^{n-i}) / (1 - q^{i+1}); every step is
  // exact, so both updates run in place on dense integer coefficients.
  std::vector<mpz_class> c(static_cast<std::size_t>(m * (n - m + 1)) + 1);  // m <= n/2 bounds every intermediate degree
  c[0] = 1;
  long deg = 0;
  for (long i = 0; i < m; ++i) {
    const long up = n - i;
    for (long e = deg + up; e >= up; --e) {
      c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - up)];
    }
    deg += up;
    const long down = i + 1;
    deg -= down;
    for (long e = down; e <= deg; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - down)];
    for (long e = deg + 1; e <= deg + down; ++e) c[static_cast<std::size_t>(e)] = 0;
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(c.size());
  for (long e = 0; e <= deg; ++e) {
    if (sgn(c[static_cast<std::size_t>(e)]) != 0) terms.emplace_back(e, Rational(c[static_cast<std::size_t>(e)]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// (c q^e; q)_n for integer c and e >= 0, multiplied in place on dense
// integer coefficients.
LaurentPoly dense_qpoch(const mpz_class& c, Exponent e, long n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n * e + binom2(n)) + 1);
  p[0] = 1;
  long deg = 0;
  for (long k = 0; k < n; ++k) {
    const long s = e + k;
    for (long i = deg + s; i >= s; --i) {
      mpz_submul(p[static_cast<std::size_t>(i)].get_mpz_t(), c.get_mpz_t(), p[static_cast<std::size_t>(i - s)].get_mpz_t());
    }
    deg += s;
  }
  std::vector<LaurentPoly::Term> terms;
  for (long i = 0; i <= deg; ++i) {
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) terms.emplace_back(i, Rational(p[static_cast<std::size_t>(i)]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

MonomialBase::MonomialBase(Rational coeff, Exponent exp) : coeff_(std::move(coeff)), exp_(exp) {
  if (sgn(coeff_) == 0) throw DomainError("Pochhammer base must have a nonzero coefficient");
}

LaurentPoly qbinom(long n, long m) {
  if (m < 0 || m > n) return {};
  const long k = std::min(m, n - m);
  if (k == 0) return LaurentPoly(1L);
  return qbinom_memo().get({n, k}, [&] { return compute_qbinom(n, k); });
}

LaurentPoly mul_qpoch(LaurentPoly p, const MonomialBase& a, long n) {
  if (n < 0) throw DomainError("mul_qpoch requires a nonnegative length");
  for (long k = 0; k < n && !p.is_zero(); ++k) p *= LaurentPoly::one_minus(a.coeff(), a.exp() + k);
  return p;
}

LaurentPoly qpoch_poly(const MonomialBase& a, long n) {
  if (n < 0) throw DomainError("qpoch_poly requires a nonnegative length");
  if (n == 0) return LaurentPoly(1L);
  return qpoch_memo().get({a.coeff(), a.exp(), n}, [&] {
    if (a.coeff().get_den() != 1 || a.exp() < 0) return mul_qpoch(LaurentPoly(1L), a, n);
    return dense_qpoch(a.coeff().get_num(), a.exp(), n);
  });
}

RationalFunction qpoch(const MonomialBase& a, long n) {
  if (n >= 0) return qpoch_poly(a, n);
  const long d = -n;
  const MonomialBase shifted = a.times_q(-d);
  if (shifted.coeff() == 1 && shifted.exp() <= 0 && shifted.exp() + d - 1 >= 0) {
    throw ZeroDivisionError("(a;q)_" + std::to_string(n) + " has a vanishing factor 1 - q^0");
  }
  return RationalFunction(LaurentPoly(1L), qpoch_poly(shifted, d));
}

LawSides<LaurentPoly, LaurentPoly> qbinom_qinv_law(long n, long m) {
  const LaurentPoly b = qbinom(n, m);
  return {b.subst_qinv(), b.shifted(m * (m - n))};
}

LawSides<LaurentPoly, LaurentPoly> qpoch_qinv_law(long n) {
  if (n < 0) throw DomainError("qpoch_qinv_law requires n >= 0");
  // Left side built directly in base q^{-1}: prod_{k<n} (1 + q^{-1} q^{-k}).
  LaurentPoly lhs(1L);
  for (long k = 0; k < n; ++k) lhs *= LaurentPoly::one_minus(Rational(-1), -1 - k);
  return {lhs, qpoch_poly(MonomialBase::minus_q(), n).shifted(-binom2(n + 1))};
}

LawSides<RationalFunction, LaurentPoly> pascal_variant(long n, long r) {
  if (r < 1 || r > n) throw DomainError("pascal_variant requires 1 <= r <= n");
  const RationalFunction lhs = RationalFunction(qbinom(2 * n - r + 1, r)) *
                               RationalFunction(LaurentPoly::one_minus(Rational(1), 2 * n + 1),
                                                LaurentPoly::one_minus(Rational(1), 2 * n - r + 1));
  return {lhs, qbinom(2 * n - r, r - 1) + qbinom(2 * n - r + 1, r).shifted(r)};
}

CacheStats qcomb_cache_stats() {
  const CacheStats a = qbinom_memo().stats();
  const CacheStats b = qpoch_memo().stats();
  return {a.entries + b.entries, a.terms + b.terms};
}

void qcomb_clear_caches() {
  qbinom_memo().clear();
  qpoch_memo().clear();
}

}  // namespace qtrunc
