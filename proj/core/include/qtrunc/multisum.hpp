#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "qtrunc/laurent_poly.hpp"
#include "qtrunc/rational_function.hpp"

namespace qtrunc {

/// A cyclic multiple sum
///
///   sum over r_1..r_m in [lo(n), hi(n)] of prod_k link(n, r_k, r_{k+1}),  r_{m+1} = r_1,
///
/// where each link factor is binomial(n, a, b) * weight(n, a, b). The
/// evaluator closes the cycle itself; callers only describe one link.
struct MultiSumSpec {
  std::string name;
  long arity = 1;
  std::function<long(long n)> lo;
  std::function<long(long n)> hi;
  /// The q-binomial part of a link. A zero value prunes the link before
  /// weight is evaluated, so weight never sees a tuple whose term vanishes.
  std::function<LaurentPoly(long n, long a, long b)> binomial;
  std::function<RationalFunction(long n, long a, long b)> weight;
};

/// Exact value of the multiple sum at n.
///
/// Implemented as trace(H^m) / M^m, where M is the least common multiple of
/// the link denominators and H the link matrix scaled by M, so no rational
/// function arithmetic happens inside the m-fold loop.
RationalFunction eval_multisum(const MultiSumSpec& spec, long n);

/// U_m(n): r_k in [0, 2n+1], links (-1)^a q^{binom(a,2)} (-q;q)_{n-a} [2n-a+1 over b].
MultiSumSpec u_spec(long m);
/// W_m(n): r_k in [0, 2n], links (-1)^a q^{binom(a,2)} (-q;q)_{n-a} [2n-a over b].
MultiSumSpec w_spec(long m);

enum class GzKind { Pent1, Pent2 };
/// Guo-Zeng multiple pentagonal sums, parameterized by L.
///   Pent1: j_k in [-L, 2L],   links (-1)^a q^{ab + binom(a+1,2)} [2L-a over L+b]
///   Pent2: j_k in [-L, 2L+1], links (-1)^a q^{ab + binom(a,2)}   [2L-a+1 over L+b]
MultiSumSpec gz_spec(GzKind kind, long m);

/// Memoized U_m(n) and W_m(n); m >= 1, n >= 1.
RationalFunction um(long m, long n);
RationalFunction wm(long m, long n);

enum class ClosedForm { U2, U3, W2, W3 };
std::string_view to_string(ClosedForm which);
/// The known closed forms for U_2, U_3, W_2, W_3 (n >= 1), including the 1/2 factors.
RationalFunction closed_form(ClosedForm which, long n);
/// The multiple sum a closed form describes.
RationalFunction closed_form_sequence(ClosedForm which, long n);

/// Guo-Zeng multiple sum value and its predicted constant; m >= 1, L >= 0.
RationalFunction gz_multisum(GzKind kind, long m, long L);
LaurentPoly gz_rhs(GzKind kind, long m, long L);

}  // namespace qtrunc
