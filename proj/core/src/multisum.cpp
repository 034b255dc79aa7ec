#include "qtrunc/multisum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qtrunc/errors.hpp"
#include "qtrunc/qcomb.hpp"

namespace qtrunc {
namespace {

constexpr bool is_odd(long x) { return (x % 2) != 0; }

using PolyMatrix = std::vector<LaurentPoly>;  // row-major, size x size

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t size) {
  PolyMatrix out(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      const LaurentPoly& aik = a[i * size + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < size; ++j) {
        const LaurentPoly& bkj = b[k * size + j];
        if (!bkj.is_zero()) out[i * size + j] += aik * bkj;
      }
    }
  }
  return out;
}

// trace(a * b)
LaurentPoly trace_of_product(const PolyMatrix& a, const PolyMatrix& b, std::size_t size) {
  LaurentPoly acc;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const LaurentPoly& aij = a[i * size + j];
      const LaurentPoly& bji = b[j * size + i];
      if (!aij.is_zero() && !bji.is_zero()) acc += aij * bji;
    }
  }
  return acc;
}

PolyMatrix power(const PolyMatrix& h, long exponent, std::size_t size) {
  PolyMatrix p = h;
  for (long e = 1; e < exponent; ++e) p = multiply(p, h, size);
  return p;
}

RationalFunction signed_monomial(long sign_exponent, Exponent exp, const Rational& scale = Rational(1)) {
  return RationalFunction(LaurentPoly::monomial(is_odd(sign_exponent) ? Rational(-scale) : scale, exp));
}

MultiSumSpec pochhammer_spec(std::string name, long m, long top_offset) {
  MultiSumSpec s;
  s.name = std::move(name);
  s.arity = m;
  s.lo = [](long) { return 0L; };
  s.hi = [top_offset](long n) { return 2 * n + top_offset; };
  s.binomial = [top_offset](long n, long a, long b) { return qbinom(2 * n - a + top_offset, b); };
  s.weight = [](long n, long a, long) {
    RationalFunction w = qpoch(MonomialBase::minus_q(), n - a);
    return w * signed_monomial(a, binom2(a));
  };
  return s;
}

class SequenceMemo {
 public:
  RationalFunction get(char kind, long m, long n) {
    const auto key = std::make_tuple(kind, m, n);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    RationalFunction v = eval_multisum(kind == 'U' ? u_spec(m) : w_spec(m), n);
    std::lock_guard lock(mutex_);
    table_.emplace(key, v);
    return v;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<char, long, long>, RationalFunction> table_;
};

SequenceMemo& sequence_memo() {
  static SequenceMemo memo;
  return memo;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

RationalFunction eval_multisum(const MultiSumSpec& spec, long n) {
  require(spec.arity >= 1, "multiple sum arity must be at least 1");
  const long lo = spec.lo(n);
  const long hi = spec.hi(n);
  if (hi < lo) return {};
  const auto size = static_cast<std::size_t>(hi - lo + 1);

  std::vector<std::optional<RationalFunction>> links(size * size);
  LaurentPoly common(1L);
  std::vector<LaurentPoly> seen_dens;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long a = lo + static_cast<long>(i);
      const long b = lo + static_cast<long>(j);
      LaurentPoly bin = spec.binomial(n, a, b);
      if (bin.is_zero()) continue;
      RationalFunction link = spec.weight(n, a, b) * RationalFunction(std::move(bin));
      if (link.is_zero()) continue;
      if (!link.is_polynomial() && std::find(seen_dens.begin(), seen_dens.end(), link.den()) == seen_dens.end()) {
        seen_dens.push_back(link.den());
        common *= divexact(link.den(), gcd(common, link.den()));
      }
      links[i * size + j] = std::move(link);
    }
  }

  PolyMatrix h(size * size);
  for (std::size_t idx = 0; idx < links.size(); ++idx) {
    if (!links[idx]) continue;
    const RationalFunction& f = *links[idx];
    h[idx] = f.is_polynomial() ? f.num() * common : f.num() * divexact(common, f.den());
  }

  LaurentPoly trace;
  if (spec.arity == 1) {
    for (std::size_t i = 0; i < size; ++i) trace += h[i * size + i];
  } else {
    const long half = spec.arity / 2;
    const PolyMatrix q = power(h, half, size);
    const PolyMatrix p = (spec.arity % 2 == 0) ? q : multiply(q, h, size);
    trace = trace_of_product(p, q, size);
  }
  return RationalFunction(trace, common.pow(static_cast<unsigned>(spec.arity)));
}

MultiSumSpec u_spec(long m) { return pochhammer_spec("U_" + std::to_string(m), m, 1); }
MultiSumSpec w_spec(long m) { return pochhammer_spec("W_" + std::to_string(m), m, 0); }

MultiSumSpec gz_spec(GzKind kind, long m) {
  MultiSumSpec s;
  s.arity = m;
  s.lo = [](long L) { return -L; };
  if (kind == GzKind::Pent1) {
    s.name = "GZ1_" + std::to_string(m);
    s.hi = [](long L) { return 2 * L; };
    s.binomial = [](long L, long a, long b) { return qbinom(2 * L - a, L + b); };
    s.weight = [](long, long a, long b) { return signed_monomial(a, a * b + binom2(a + 1)); };
  } else {
    s.name = "GZ2_" + std::to_string(m);
    s.hi = [](long L) { return 2 * L + 1; };
    s.binomial = [](long L, long a, long b) { return qbinom(2 * L - a + 1, L + b); };
    s.weight = [](long, long a, long b) { return signed_monomial(a, a * b + binom2(a)); };
  }
  return s;
}

RationalFunction um(long m, long n) {
  require(m >= 1 && n >= 1, "U_m(n) needs m >= 1 and n >= 1");
  return sequence_memo().get('U', m, n);
}

RationalFunction wm(long m, long n) {
  require(m >= 1 && n >= 1, "W_m(n) needs m >= 1 and n >= 1");
  return sequence_memo().get('W', m, n);
}

std::string_view to_string(ClosedForm which) {
  switch (which) {
    case ClosedForm::U2:
      return "U2";
    case ClosedForm::U3:
      return "U3";
    case ClosedForm::W2:
      return "W2";
    case ClosedForm::W3:
      return "W3";
  }
  return "?";
}

RationalFunction closed_form(ClosedForm which, long n) {
  require(n >= 1, "closed forms are stated for n >= 1");
  const Rational half(1, 2);
  switch (which) {
    case ClosedForm::U2:
      return {};
    case ClosedForm::U3: {
      if (is_odd(n)) return {};
      const long k = n / 2;
      return signed_monomial(k - 1, 9 * k * k + 3 * k, half);
    }
    case ClosedForm::W2:
      return signed_monomial(n, n * (3 * n - 1) / 2);
    case ClosedForm::W3: {
      if (is_odd(n)) {
        const long k = (n + 1) / 2;
        return signed_monomial(k, 9 * k * k - 9 * k + 3, half) -
               signed_monomial(k, 9 * k * k - 11 * k + 3, Rational(3, 2));
      }
      const long k = n / 2;
      return signed_monomial(k - 1, 9 * k * k - 3 * k, half) - signed_monomial(k - 1, 9 * k * k - k, Rational(3, 2));
    }
  }
  return {};
}

RationalFunction closed_form_sequence(ClosedForm which, long n) {
  switch (which) {
    case ClosedForm::U2:
      return um(2, n);
    case ClosedForm::U3:
      return um(3, n);
    case ClosedForm::W2:
      return wm(2, n);
    case ClosedForm::W3:
      return wm(3, n);
  }
  return {};
}

RationalFunction gz_multisum(GzKind kind, long m, long L) {
  require(m >= 1 && L >= 0, "Guo-Zeng sums need m >= 1 and L >= 0");
  return eval_multisum(gz_spec(kind, m), L);
}

LaurentPoly gz_rhs(GzKind kind, long m, long L) {
  const bool multiple_of_three = (m % 3 == 0);
  if (kind == GzKind::Pent1) return multiple_of_three ? LaurentPoly(3 * L + 1) : LaurentPoly(1L);
  if (!multiple_of_three) return LaurentPoly(is_odd(m * m / 3) ? -1L : 1L);
  return LaurentPoly(is_odd(m / 3) ? -(3 * L + 2) : 3 * L + 2);
}

}  // namespace qtrunc
