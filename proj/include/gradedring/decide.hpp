#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gradedring/algebra.hpp"

namespace gradedring {

struct DecideOptions {
  /// Largest power tried by bounded power searches in quotient families.
  unsigned power_cap = 64;
  /// Largest finite ring handed to exhaustive scans.
  std::uint64_t enumeration_cap = 65536;
};

/// C(f) is a proper ideal. Exactly one of the structured fields is set.
struct ContentProper {
  std::string evidence;
  /// Every coefficient of f is divisible by this prime (monoid rings over Z/n).
  std::optional<mpz_class> prime;
  /// The degree-zero component of f is not a unit of the base ring
  /// (positively graded rings, where C(f) lies in (f_0) + R_+).
  bool degree_zero_nonunit = false;
  /// The ideal spanned by the components misses 1 (finite rings).
  bool span_misses_one = false;
};

/// f_i * f_k is not nilpotent for the grades i != k.
struct CrossPairNotNilpotent {
  Grade i;
  Grade k;
};

/// gcd(f, m) is a non-constant common factor of f and the monic relation m.
struct CommonFactor {
  Element gcd;
};

/// f^k = e for an idempotent e != 1, so f is not a unit. Used for finite rings
/// whose grading group is not ordered.
struct PowerIdempotent {
  unsigned exponent;
  Element idempotent;
};

struct UnitCert {
  Element inverse;
};

struct NotUnitCert {
  std::variant<ContentProper, CrossPairNotNilpotent, CommonFactor, PowerIdempotent> obstruction;
};

struct NilpotentCert {
  unsigned exponent;
};

struct NotNilpotentCert {
  /// Grade of a component that is not nilpotent (ordered gradings).
  std::optional<Grade> component;
  /// Power k with f^k = f^j for some j < k and f^k != 0 (direct power search).
  std::optional<unsigned> stabilized_power;
  std::string detail;
};

struct ZeroDivisorCert {
  Element annihilator;
  /// Always true for ordered gradings.
  bool homogeneous = true;
};

struct NotZeroDivisorCert {
  std::string reason;
};

struct IdempotentReport {
  bool is_idempotent = false;
  bool homogeneous_degree_zero = false;
  std::vector<Grade> offending_grades;
};

using Certificate = std::variant<UnitCert, NotUnitCert, NilpotentCert, NotNilpotentCert,
                                 ZeroDivisorCert, NotZeroDivisorCert, IdempotentReport>;

/// "unit", "not_unit", "nilpotent", ...
std::string verdict_name(const Certificate& c);

/// Re-checks the certificate for f by direct arithmetic.
bool verify(const Element& f, const Certificate& c, const DecideOptions& opts = {});

Certificate is_nilpotent(const Element& f, const DecideOptions& opts = {});
Certificate is_unit(const Element& f, const DecideOptions& opts = {});
/// Inverse of a homogeneous unit, asserted homogeneous of degree -deg f.
Element invert_homogeneous(const Element& f, const DecideOptions& opts = {});
/// `seed` is a nonzero h with fh = 0, required for quotient families that are
/// neither monoid rings nor finite.
Certificate is_zero_divisor(const Element& f, const std::optional<Element>& seed = std::nullopt,
                            const DecideOptions& opts = {});

/// One pass of the homogenization loop, for traces.
struct HomogenizeStep {
  Element h;
  std::size_t generator;
  Grade t;
};

/// Turns a nonzero common annihilator h of `gens` into a homogeneous one.
Element homogenize_annihilator(const std::vector<Element>& gens, const Element& h,
                               std::vector<HomogenizeStep>* trace = nullptr);

enum class IdealKind { Zero, Nilradical, Jacobson };

struct PairMembership {
  Grade i;
  Grade k;
  bool member;
};

struct ColonReport {
  bool product_member = false;
  bool all_pairs_member = false;
  std::vector<PairMembership> pairs;
};

/// Checks fg in I <=> f_i g_k in I for all i, k, for a graded radical ideal I.
/// Throws TheoremViolation when the equivalence fails.
ColonReport check_colon_gradedness(IdealKind kind, const Element& f, const Element& g,
                                   const DecideOptions& opts = {});
/// fg nilpotent <=> every f_i g_k nilpotent.
ColonReport product_nilpotent_componentwise(const Element& f, const Element& g,
                                            const DecideOptions& opts = {});

IdempotentReport check_idempotent_homogeneity(const Element& f);

}  // namespace gradedring
