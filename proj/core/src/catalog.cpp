#include "qtrunc/catalog.hpp"

#include <algorithm>

#include "qtrunc/qcomb.hpp"
#include "qtrunc/truncated_series.hpp"

namespace qtrunc {
namespace {

constexpr long floor_div(long a, long b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }
constexpr bool is_odd(long x) { return (x % 2) != 0; }

LaurentPoly signed_q_power(long sign_exponent, Exponent exp) {
  return LaurentPoly::monomial(Rational(is_odd(sign_exponent) ? -1 : 1), exp);
}

// sum_{m=lo}^{hi} (-1)^m q^{f(m)}
template <class F>
LaurentPoly signed_power_sum(long lo, long hi, F exponent_of) {
  std::vector<LaurentPoly::Term> terms;
  for (long m = lo; m <= hi; ++m) terms.emplace_back(exponent_of(m), Rational(is_odd(m) ? -1 : 1));
  return LaurentPoly::from_terms(std::move(terms));
}

IndexRange zero_to(long hi) { return {0, hi}; }

Identity single_sum(std::string id, IdentityKind kind, std::string param, long param_min, std::string citation,
                    std::string summary, SingleSum sum, std::function<LaurentPoly(long)> rhs) {
  Identity out{std::move(id), kind, std::move(param), param_min, std::move(citation), std::move(summary),
               nullptr, std::move(rhs), std::move(sum)};
  out.lhs = [s = *out.sum](long p) { return s.evaluate(p); };
  return out;
}

// Most summands use the summation index itself as the sign exponent.
IndexFn idx() {
  return [](long, long i) { return i; };
}

std::vector<Identity> build_entries() {
  using K = IdentityKind;
  std::vector<Identity> v;

  // ---- finite forms of Euler's pentagonal number theorem -------------------
  v.push_back(single_sum(
      "EZ", K::PolynomialInN, "n", 0, "Ekhad-Zeilberger finite pentagonal identity",
      "sum_{r=0}^{floor(n/2)} (-1)^r q^{binom(r,2)} [n-r over r]",
      {"r", [](long n) { return zero_to(n / 2); },
       {idx(), [](long, long r) { return binom2(r); }, std::nullopt,
        [](long n, long r) { return n - r; }, [](long, long r) { return r; }, std::nullopt, std::nullopt}},
      [](long n) -> LaurentPoly {
        if (n % 3 == 2) return {};
        return signed_q_power(n / 3, n * (n - 1) / 6);
      }));

  v.push_back(single_sum(
      "BG", K::PolynomialInL, "L", 0, "Berkovich-Garvan truncated pentagonal number theorem",
      "sum_{k=-L}^{L} (-1)^k q^{k(3k+1)/2} [2L-k over L+k] = 1",
      {"k", [](long L) { return IndexRange{-L, L}; },
       {idx(), [](long, long k) { return k * (3 * k + 1) / 2; }, std::nullopt,
        [](long L, long k) { return 2 * L - k; }, [](long L, long k) { return L + k; }, std::nullopt, std::nullopt}},
      [](long) { return LaurentPoly(1L); }));

  v.push_back(single_sum(
      "WARNAAR", K::PolynomialInL, "L", 0, "Warnaar truncated pentagonal number theorem",
      "sum_{k=-L}^{L} (-1)^k q^{k(3k-1)/2} [2L-k+1 over L+k] = 1",
      {"k", [](long L) { return IndexRange{-L, L}; },
       {idx(), [](long, long k) { return k * (3 * k - 1) / 2; }, std::nullopt,
        [](long L, long k) { return 2 * L - k + 1; }, [](long L, long k) { return L + k; }, std::nullopt,
        std::nullopt}},
      [](long) { return LaurentPoly(1L); }));

  // ---- Liu's truncations of Gauss' square exponent theorem -----------------
  const auto square = [](long, long k) { return k * k; };
  const auto L_minus_k = [](long L, long k) { return L - k; };
  const auto L_plus_k = [](long L, long k) { return L + k; };
  const auto symmetric = [](long L) { return IndexRange{-L, L}; };
  const auto one = [](long) { return LaurentPoly(1L); };

  v.push_back(single_sum(
      "LIU-T1", K::PolynomialInL, "L", 1, "Liu truncated Gauss identity, first form",
      "sum_{k=-L}^{L} (-1)^k q^{k^2} (-q;q)_{L-k} [3L-k+1 over L+k] = 1",
      {"k", symmetric,
       {idx(), square, L_minus_k, [](long L, long k) { return 3 * L - k + 1; }, L_plus_k, std::nullopt,
        std::nullopt}},
      one));

  v.push_back(single_sum(
      "LIU-T2", K::PolynomialInL, "L", 1, "Liu truncated Gauss identity, second form",
      "sum_{k=-L}^{L} (-1)^k q^{k^2} (-q;q)_{L-k} [3L-k over L+k] (1-q^{2L})/(1-q^{3L-k}) = 1",
      {"k", symmetric,
       {idx(), square, L_minus_k, [](long L, long k) { return 3 * L - k; }, L_plus_k,
        [](long L, long) { return 2 * L; }, [](long L, long k) { return 3 * L - k; }}},
      one));

  v.push_back(single_sum(
      "LIU-T3", K::PolynomialInL, "L", 1, "Liu truncated Gauss identity, third form",
      "sum_{k=-L}^{L} (-1)^k q^{k^2} (-q;q)_{L-k} [3L-k-1 over L+k-1] = 1",
      {"k", symmetric,
       {idx(), square, L_minus_k, [](long L, long k) { return 3 * L - k - 1; },
        [](long L, long k) { return L + k - 1; }, std::nullopt, std::nullopt}},
      one));

  // ---- single sums in n behind the truncations ------------------------------
  const auto r_choose_2 = [](long, long r) { return binom2(r); };
  const auto n_minus_r = [](long n, long r) { return n - r; };
  const auto r_bottom = [](long, long r) { return r; };
  const auto two_n_minus_r_plus_1 = [](long n, long r) { return 2 * n - r + 1; };
  const auto two_n_minus_r = [](long n, long r) { return 2 * n - r; };
  const auto zero_to_n = [](long n) { return zero_to(n); };

  v.push_back(single_sum(
      "JOUHET-U", K::PolynomialInN, "n", 0, "Jouhet / Liu sum U_n",
      "U_n = sum_{r=0}^{n} (-1)^r q^{binom(r,2)} (-q;q)_{n-r} [2n-r+1 over r]",
      {"r", zero_to_n, {idx(), r_choose_2, n_minus_r, two_n_minus_r_plus_1, r_bottom, std::nullopt, std::nullopt}},
      [](long n) -> LaurentPoly {
        if (is_odd(n)) return {};
        const long m = n / 2;
        return signed_q_power(m, m * (3 * m + 1));
      }));

  v.push_back(single_sum(
      "LIU-V", K::PolynomialInN, "n", 1, "Liu sum with factor (1-q^n)/(1-q^{2n-r})",
      "sum_{r=0}^{n} (-1)^r q^{binom(r,2)} (-q;q)_{n-r} [2n-r over r] (1-q^n)/(1-q^{2n-r})",
      {"r", zero_to_n,
       {idx(), r_choose_2, n_minus_r, two_n_minus_r, r_bottom, [](long n, long) { return n; }, two_n_minus_r}},
      [](long n) -> LaurentPoly {
        if (is_odd(n)) return {};
        const long m = n / 2;
        return signed_q_power(m, m * (3 * m - 1));
      }));

  v.push_back(single_sum(
      "LIU-W", K::PolynomialInN, "n", 1, "Liu sum W_n",
      "W_n = sum_{r=0}^{n} (-1)^r q^{binom(r,2)} (-q;q)_{n-r} [2n-r over r]",
      {"r", zero_to_n, {idx(), r_choose_2, n_minus_r, two_n_minus_r, r_bottom, std::nullopt, std::nullopt}},
      [](long n) -> LaurentPoly {
        if (is_odd(n)) {
          const long m = (n + 1) / 2;
          return signed_q_power(m - 1, 3 * m * m - 3 * m + 1);
        }
        const long m = n / 2;
        return signed_q_power(m, m * (3 * m - 1));
      }));

  const auto two_n_plus_1 = [](long n, long) { return 2 * n + 1; };

  v.push_back(single_sum(
      "NEW-A", K::PolynomialInN, "n", 1, "telescoped U_n - q^{2n} U_{n-1}",
      "sum_{r=0}^{n} (-1)^r q^{binom(r,2)} (-q;q)_{n-r} [2n-r+1 over r] (1-q^{2n+1})/(1-q^{2n-r+1})",
      {"r", zero_to_n,
       {idx(), r_choose_2, n_minus_r, two_n_minus_r_plus_1, r_bottom, two_n_plus_1, two_n_minus_r_plus_1}},
      [](long n) -> LaurentPoly {
        if (is_odd(n)) {
          const long m = (n + 1) / 2;
          return signed_q_power(m, m * (3 * m - 1));
        }
        const long m = n / 2;
        return signed_q_power(m, m * (3 * m + 1));
      }));

  v.push_back(single_sum(
      "NEW-A-TRUNC", K::PolynomialInL, "L", 1, "truncated Gauss identity from NEW-A at n = 2L-1",
      "sum_{k=-L}^{L-1} (-1)^k q^{k^2} (-q;q)_{L-k-1} [3L-k-1 over L+k] (1-q^{4L-1})/(1-q^{3L-k-1}) = 1",
      {"k", [](long L) { return IndexRange{-L, L - 1}; },
       {idx(), square, [](long L, long k) { return L - k - 1; }, [](long L, long k) { return 3 * L - k - 1; },
        L_plus_k, [](long L, long) { return 4 * L - 1; }, [](long L, long k) { return 3 * L - k - 1; }}},
      one));

  v.push_back(single_sum(
      "NEW-B", K::PolynomialInN, "n", 1, "telescoped -U_{n-1} + q U_n",
      "sum_{r=0}^{n} (-1)^r q^{binom(r-1,2)} (-q;q)_{n-r} [2n-r+1 over r] (1-q^{2n+1})/(1-q^{2n-r+1})",
      {"r", zero_to_n,
       {idx(), [](long, long r) { return binom2(r - 1); }, n_minus_r, two_n_minus_r_plus_1, r_bottom, two_n_plus_1,
        two_n_minus_r_plus_1}},
      [](long n) -> LaurentPoly {
        if (is_odd(n)) {
          const long m = (n + 1) / 2;
          return signed_q_power(m, (m - 1) * (3 * m - 2));
        }
        const long m = n / 2;
        return signed_q_power(m, m * (3 * m + 1) + 1);
      }));

  v.push_back(single_sum(
      "NEW-B-TRUNC", K::PolynomialInL, "L", 1, "truncated Gauss identity from NEW-B at n = 2L",
      "sum_{k=-L}^{L} (-1)^k q^{k^2} (-q;q)_{L-k} [3L-k+1 over L+k] (1-q^{4L+1})/(1-q^{3L-k+1}) = 1",
      {"k", symmetric,
       {idx(), square, L_minus_k, [](long L, long k) { return 3 * L - k + 1; }, L_plus_k,
        [](long L, long) { return 4 * L + 1; }, [](long L, long k) { return 3 * L - k + 1; }}},
      one));

  v.push_back(single_sum(
      "TILDE-U", K::PolynomialInN, "n", 0, "bilateral partial sum tildeU_n",
      "sum_{r=0}^{n} (-1)^r q^{binom(r+1,2)} (-q;q)_{n-r} [2n-r+1 over r]",
      {"r", zero_to_n,
       {idx(), [](long, long r) { return binom2(r + 1); }, n_minus_r, two_n_minus_r_plus_1, r_bottom, std::nullopt,
        std::nullopt}},
      [](long n) {
        return signed_power_sum(-(n / 2), (n + 1) / 2, [](long m) { return m * (3 * m - 1); });
      }));

  v.push_back(single_sum(
      "LIU2017A", K::PolynomialInN, "n", 0, "Liu truncation of Euler's q-exponential identity",
      "sum_{r=0}^{floor(n/2)} (-1)^r q^{binom(r+1,2)} [n-r over r]",
      {"r", [](long n) { return zero_to(n / 2); },
       {idx(), [](long, long r) { return binom2(r + 1); }, std::nullopt, [](long n, long r) { return n - r; },
        r_bottom, std::nullopt, std::nullopt}},
      [](long n) {
        return signed_power_sum(-floor_div(n + 1, 3), floor_div(n, 3),
                                [](long m) { return m * (3 * m + 1) / 2; });
      }));

  // ---- infinite identities, compared through q^order -----------------------
  v.push_back({"PENTAGONAL", K::Series, "order", 0, "Euler pentagonal number theorem",
               "(q;q)_inf = sum_k (-1)^k q^{k(3k+1)/2}",
               [](long o) { return euler_product(-1, o).to_poly(); },
               [](long o) { return pentagonal_sum(o).to_poly(); }, std::nullopt});
  v.push_back({"GAUSS", K::Series, "order", 0, "Gauss square exponent theorem",
               "(q;q)_inf/(-q;q)_inf = sum_k (-1)^k q^{k^2}",
               [](long o) { return (euler_product(-1, o) * inverse(euler_product(+1, o))).to_poly(); },
               [](long o) { return theta_gauss(o).to_poly(); }, std::nullopt});
  v.push_back({"EULER-EXP", K::Series, "order", 0, "Euler q-exponential identity",
               "sum_r (-1)^r q^{binom(r+1,2)}/(q;q)_r = (q;q)_inf",
               [](long o) { return euler_exponential_check(o).series_sum.to_poly(); },
               [](long o) { return euler_product(-1, o).to_poly(); }, std::nullopt});
  v.push_back({"GZ-THETA", K::Series, "L", 1, "Guo-Zeng truncated theta series, through q^40",
               "(-q;q)_inf/(q;q)_inf sum_{|k|<=L} (-1)^k q^{k^2} = 1 + (-1)^L sum_{n>L} ...",
               [](long L) { return gz_identity_check(L, 40).first.to_poly(); },
               [](long L) { return gz_identity_check(L, 40).second.to_poly(); }, std::nullopt});
  return v;
}

}  // namespace

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::PolynomialInN:
      return "polynomial-in-n";
    case IdentityKind::PolynomialInL:
      return "polynomial-in-L";
    case IdentityKind::Series:
      return "series";
  }
  return "unknown";
}

RationalFunction Summand::operator()(long param, long index) const {
  LaurentPoly body = qbinom(top(param, index), bottom(param, index));
  if (body.is_zero()) return {};
  Exponent num_exp = 0;
  Exponent den_exp = 0;
  if (ratio_num) {
    num_exp = (*ratio_num)(param, index);
    if (num_exp == 0) return {};
    den_exp = (*ratio_den)(param, index);
    if (den_exp == 0) {
      throw ZeroDivisionError("pole 1/(1-q^0) at parameter " + std::to_string(param) + ", index " +
                              std::to_string(index));
    }
  }
  const long length = poch ? (*poch)(param, index) : 0;
  if (length > 0) body *= qpoch_poly(MonomialBase::minus_q(), length);
  body = body.shifted(exponent(param, index));
  if (is_odd(sign(param, index))) body = -body;

  RationalFunction value = ratio_num ? RationalFunction(body * LaurentPoly::one_minus(Rational(1), num_exp),
                                                        LaurentPoly::one_minus(Rational(1), den_exp))
                                     : RationalFunction(std::move(body));
  if (length < 0) value *= qpoch(MonomialBase::minus_q(), length);
  return value;
}

LaurentPoly SingleSum::evaluate(long param) const {
  const IndexRange r = range(param);
  LaurentPoly poly_part;
  RationalFunction rational_part;
  for (long i = r.lo; i <= r.hi; ++i) {
    RationalFunction t = summand(param, i);
    if (t.is_polynomial()) {
      poly_part += t.num();
    } else {
      rational_part += t;
    }
  }
  if (rational_part.is_zero()) return poly_part;
  return to_poly(rational_part + RationalFunction(std::move(poly_part)));
}

Catalog::Catalog() : entries_(build_entries()) {}

const Identity& Catalog::find(std::string_view id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Identity& e) { return e.id == id; });
  if (it == entries_.end()) throw UnknownIdentityError("unknown identity: " + std::string(id));
  return *it;
}

bool Catalog::contains(std::string_view id) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Identity& e) { return e.id == id; });
}

std::vector<std::string> Catalog::ids(bool include_series) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (include_series || e.kind != IdentityKind::Series) out.push_back(e.id);
  }
  return out;
}

const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

std::pair<LaurentPoly, LaurentPoly> eval_identity(std::string_view id, long p) {
  const Identity& e = catalog().find(id);
  if (p < e.param_min) {
    throw DomainError(e.id + ": parameter " + std::to_string(p) + " below minimum " + std::to_string(e.param_min));
  }
  return {e.lhs(p), e.rhs(p)};
}

namespace {

LaurentPoly lhs_of(std::string_view id, long p) { return catalog().find(id).lhs(p); }

void require_positive(long n) {
  if (n < 1) throw DomainError("telescoping relations need n >= 1");
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> derive_U_relation(long n) {
  require_positive(n);
  return {lhs_of("NEW-A", n), lhs_of("JOUHET-U", n) - lhs_of("JOUHET-U", n - 1).shifted(2 * n)};
}

std::pair<LaurentPoly, LaurentPoly> derive_B_relation(long n) {
  require_positive(n);
  return {lhs_of("NEW-B", n), lhs_of("JOUHET-U", n).shifted(1) - lhs_of("JOUHET-U", n - 1)};
}

std::pair<LaurentPoly, LaurentPoly> derive_tildeU_relation(long n) {
  require_positive(n);
  return {lhs_of("NEW-A", n), lhs_of("TILDE-U", n) - lhs_of("TILDE-U", n - 1)};
}

const std::vector<SubstitutionRecipe>& substitution_recipes() {
  static const std::vector<SubstitutionRecipe> recipes{
      {"JOUHET-U", "LIU-T1", 2, 0, 0, 0, 0},   {"LIU-V", "LIU-T2", 2, 0, 0, 0, 0},
      {"LIU-W", "LIU-T3", 2, -1, -1, 0, 0},    {"NEW-A", "NEW-A-TRUNC", 2, -1, 0, 0, -1},
      {"NEW-B", "NEW-B-TRUNC", 2, 0, 0, 0, 0}, {"EZ", "BG", 3, 0, 0, 0, 0},
      {"EZ", "WARNAAR", 3, 1, 0, 0, 0},
  };
  return recipes;
}

std::vector<TermComparison> check_substitution(const SubstitutionRecipe& recipe, long L) {
  const Identity& source = catalog().find(recipe.source);
  const Identity& target = catalog().find(recipe.target);
  if (!source.sum || !target.sum) throw DomainError("substitution needs single-sum identities");
  const long p = recipe.param_scale * L + recipe.param_offset;
  const RationalFunction scale(source.rhs(p).subst_qinv());
  std::vector<TermComparison> out;
  for (long k = -L + recipe.k_lo_offset; k <= L + recipe.k_hi_offset; ++k) {
    out.push_back({k, source.sum->summand(p, L + k + recipe.index_offset).subst_qinv(), scale * target.sum->summand(L, k)});
  }
  return out;
}

std::string describe(const Mutation& m) {
  std::string s = (m.kind == MutationKind::ExponentShift) ? "exponent+1" : "sign-flip";
  s += (m.scope == MutationScope::AllTerms) ? " (all terms)" : " (first term)";
  return s;
}

Identity mutated(const Identity& identity, const Mutation& mutation) {
  if (!identity.sum) throw DomainError(identity.id + " has no single-sum form to mutate");
  Identity out = identity;
  SingleSum& sum = *out.sum;
  // A term that vanishes identically absorbs any perturbation, so the first
  // term means the first one that is nonzero at this parameter.
  const auto first_live = [original = identity.sum->summand, range = sum.range](long p) {
    const IndexRange r = range(p);
    for (long i = r.lo; i <= r.hi; ++i)
      if (!original(p, i).is_zero()) return i;
    return r.lo;
  };
  const auto applies = [first_live, scope = mutation.scope](long p, long i) {
    return scope == MutationScope::AllTerms || i == first_live(p);
  };
  if (mutation.kind == MutationKind::ExponentShift) {
    sum.summand.exponent = [base = sum.summand.exponent, applies](long p, long i) {
      return base(p, i) + (applies(p, i) ? 1 : 0);
    };
  } else {
    sum.summand.sign = [base = sum.summand.sign, applies](long p, long i) {
      return base(p, i) + (applies(p, i) ? 1 : 0);
    };
  }
  out.id = identity.id + "[" + describe(mutation) + "]";
  out.lhs = [s = sum](long p) { return s.evaluate(p); };
  return out;
}

}  // namespace qtrunc
