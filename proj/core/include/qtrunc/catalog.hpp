#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtrunc/errors.hpp"
#include "qtrunc/laurent_poly.hpp"
#include "qtrunc/rational_function.hpp"

namespace qtrunc {

class UnknownIdentityError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class IdentityKind { PolynomialInN, PolynomialInL, Series };
std::string_view to_string(IdentityKind kind);

using IndexFn = std::function<long(long param, long index)>;

/// One summand of a single-sum identity, in the shape shared by every entry:
///
///   (-1)^sign * q^exponent * (-q;q)_poch * [top over bottom] * (1 - q^num)/(1 - q^den)
///
/// Absent optional parts contribute a factor of 1. The q-binomial is
/// evaluated first; a vanishing binomial or a vanishing (1 - q^0) numerator
/// makes the whole term zero before any denominator is looked at.
struct Summand {
  IndexFn sign;
  IndexFn exponent;
  std::optional<IndexFn> poch;
  IndexFn top;
  IndexFn bottom;
  std::optional<IndexFn> ratio_num;
  std::optional<IndexFn> ratio_den;

  bool has_ratio() const { return ratio_num.has_value(); }
  /// Throws ZeroDivisionError, naming param and index, if a pole survives.
  RationalFunction operator()(long param, long index) const;
};

struct IndexRange {
  long lo;
  long hi;
};

struct SingleSum {
  std::string index_name;
  std::function<IndexRange(long param)> range;
  Summand summand;

  /// Sum over the range in the rational-function field, converted to a
  /// polynomial once at the end.
  LaurentPoly evaluate(long param) const;
};

/// A registered identity lhs(p) = rhs(p) over an integer parameter p.
struct Identity {
  std::string id;
  IdentityKind kind;
  std::string param_name;
  long param_min;
  std::string citation;
  std::string summary;
  std::function<LaurentPoly(long)> lhs;
  std::function<LaurentPoly(long)> rhs;
  /// Present for single-sum entries; enables termwise checks.
  std::optional<SingleSum> sum;

  bool holds_at(long p) const { return lhs(p) == rhs(p); }
};

class Catalog {
 public:
  Catalog();

  const std::vector<Identity>& entries() const { return entries_; }
  /// Throws UnknownIdentityError.
  const Identity& find(std::string_view id) const;
  bool contains(std::string_view id) const;
  std::vector<std::string> ids(bool include_series = true) const;

 private:
  std::vector<Identity> entries_;
};

/// The process-wide registry; immutable after first use.
const Catalog& catalog();

/// Both sides at p; throws UnknownIdentityError or DomainError (p < param_min).
std::pair<LaurentPoly, LaurentPoly> eval_identity(std::string_view id, long p);

/// Telescoping steps behind the new identities. Each returns (left, right),
/// which must be equal:
///   U:      (NEW-A lhs at n,  U_n - q^{2n} U_{n-1})
///   B:      (NEW-B lhs at n,  -U_{n-1} + q U_n)
///   tildeU: (NEW-A lhs at n,  tildeU_n - tildeU_{n-1})
/// where U_n is the JOUHET-U sum and tildeU_n the TILDE-U sum. n >= 1.
std::pair<LaurentPoly, LaurentPoly> derive_U_relation(long n);
std::pair<LaurentPoly, LaurentPoly> derive_B_relation(long n);
std::pair<LaurentPoly, LaurentPoly> derive_tildeU_relation(long n);

/// "replace n by a*L+b, r by L+k and q by 1/q": the source identity's summand
/// at index L+k (+ index_offset), after q -> 1/q, equals the target summand at
/// k times the source right-hand side after q -> 1/q.
struct SubstitutionRecipe {
  std::string source;
  std::string target;
  long param_scale;   // source parameter = param_scale * L + param_offset
  long param_offset;
  long index_offset;  // source index = L + k + index_offset
  long k_lo_offset;   // target index runs k = -L + k_lo_offset ... L + k_hi_offset
  long k_hi_offset;
};

const std::vector<SubstitutionRecipe>& substitution_recipes();

struct TermComparison {
  long k;
  RationalFunction transformed_source;
  RationalFunction scaled_target;
  bool equal() const { return transformed_source == scaled_target; }
};

std::vector<TermComparison> check_substitution(const SubstitutionRecipe& recipe, long L);

enum class MutationKind { ExponentShift, SignFlip };
enum class MutationScope { AllTerms, FirstTerm };

struct Mutation {
  MutationKind kind;
  MutationScope scope;
};

std::string describe(const Mutation& m);

/// A copy of a single-sum identity whose summand has one exponent or sign
/// perturbed; throws DomainError for entries without a single-sum form.
Identity mutated(const Identity& identity, const Mutation& mutation);

}  // namespace qtrunc
