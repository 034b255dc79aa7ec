#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qtrunc/laurent_poly.hpp"
#include "qtrunc/multisum.hpp"
#include "qtrunc/rational_function.hpp"

namespace qtrunc {

/// coeff * q^(n_mult * n + offset)
struct AffineMonomial {
  long coeff;
  long n_mult;
  long offset;
};

/// A product of sums of affine monomials, evaluated at a concrete n.
struct AffineProduct {
  std::vector<std::vector<AffineMonomial>> factors;

  LaurentPoly at(long n) const;
};

/// sum_{i=0}^{order} coeffs[i](n) * S(n + i) = 0
struct Recurrence {
  std::string id;
  ClosedForm sequence;
  std::vector<AffineProduct> coeffs;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  LaurentPoly coefficient(long i, long n) const { return coeffs.at(static_cast<std::size_t>(i)).at(n); }
};

/// REC-U2, REC-U3, REC-W2, REC-W3.
const std::vector<Recurrence>& recurrences();
/// Throws DomainError for an unknown id.
const Recurrence& find_recurrence(std::string_view id);

struct RecurrenceCheck {
  std::string recurrence_id;
  long n;
  RationalFunction residual;
  bool pass() const { return residual.is_zero(); }
};

using Sequence = std::function<RationalFunction(long n)>;

/// One record per n in [n_lo, n_hi]; seq is evaluated up to n_hi + order.
std::vector<RecurrenceCheck> verify_recurrence(const Recurrence& rec, const Sequence& seq, long n_lo, long n_hi);

}  // namespace qtrunc
