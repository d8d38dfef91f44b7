#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gradedring/algebra.hpp"

namespace gradedring {

/// Sorted list of element ordinals.
using ElementSet = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 65536;

/// A finite ring as integer data: an additive basis with cyclic orders and
/// integer structure constants. Element ordinals are mixed-radix numbers over
/// the basis coefficients, basis index 0 least significant.
class FiniteAlgebra {
 public:
  /// Throws PreconditionError for infinite rings and CapExceededError when the
  /// ring has more than `cap` elements.
  explicit FiniteAlgebra(RingHandle ring, std::uint64_t cap = kDefaultEnumerationCap);

  const RingHandle& ring() const { return ring_; }
  std::uint32_t size() const { return size_; }
  std::size_t dimension() const { return orders_.size(); }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  const std::vector<Grade>& basis_grades() const { return grades_; }
  /// Distinct basis grades in GradeKeyLess order.
  const std::vector<Grade>& grades() const { return distinct_grades_; }

  std::vector<std::uint32_t> digits(std::uint32_t ordinal) const;
  std::uint32_t ordinal(const std::vector<std::uint32_t>& digits) const;

  Element element(std::uint32_t ordinal) const;
  std::uint32_t index_of(const Element& f) const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

  /// Left multiplication by `a` as a matrix acting on digit vectors, for
  /// kernels that multiply one element against many.
  class Multiplier {
   public:
    std::uint32_t operator()(std::uint32_t b) const;

   private:
    friend class FiniteAlgebra;
    const FiniteAlgebra* alg_ = nullptr;
    std::vector<std::uint64_t> matrix_;  // [j * dim + k]
  };
  Multiplier multiplier(std::uint32_t a) const;

  /// Component of `a` in grade `g` (an index into grades()).
  std::uint32_t component(std::uint32_t a, std::size_t grade_index) const;
  /// Indices into grades() of the nonzero components of `a`, increasing.
  std::vector<std::size_t> support(std::uint32_t a) const;
  bool is_homogeneous(std::uint32_t a) const { return support(a).size() == 1; }
  /// True when every nonzero component has grade zero (0 included).
  bool in_degree_zero(std::uint32_t a) const;
  std::optional<std::size_t> zero_grade_index() const { return zero_grade_; }

 private:
  std::uint32_t mul_digits(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) const;

  RingHandle ring_;
  std::vector<Monomial> monomials_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> radix_;  // place values
  std::vector<Grade> grades_;
  std::vector<Grade> distinct_grades_;
  std::vector<std::size_t> grade_of_basis_;  // index into distinct_grades_
  std::optional<std::size_t> zero_grade_;
  // structure constants s[(i * dim + j) * dim + k]
  std::vector<std::uint32_t> constants_;
  std::uint32_t size_ = 0;
  std::uint32_t one_ = 0;
  std::vector<std::uint32_t> table_;  // full product table when size <= 256
};

enum class KernelMode { Serial, Parallel };

/// Brute-force predicate scans over the members of a subring `universe`
/// (all ordinals for the whole ring), each evaluated from its definition.
/// Results are indexed by position in `universe`. `serial` is the reference;
/// `parallel` distributes the outer loop with OpenMP and must agree exactly.
namespace kernels {

struct Scans {
  /// Ordinal b in the universe with ab = 1, or -1.
  std::vector<std::int64_t> inverse;
  /// Some b != 0 in the universe has ab = 0.
  std::vector<std::uint8_t> zero_divisor;
  std::vector<std::uint8_t> idempotent;
  /// Least k with a^k = 0, or 0 when a is not nilpotent.
  std::vector<std::uint32_t> nilpotency;
  /// 1 + ar is a unit for every r in the universe.
  std::vector<std::uint8_t> jacobson;

  bool operator==(const Scans&) const = default;
};

namespace serial {
std::vector<std::int64_t> unit_inverses(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> zero_divisors(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> idempotents(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint32_t> nilpotency(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> jacobson(const FiniteAlgebra& alg, const ElementSet& universe,
                                   const std::vector<std::int64_t>& inverse);
}  // namespace serial

namespace parallel {
std::vector<std::int64_t> unit_inverses(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> zero_divisors(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> idempotents(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint32_t> nilpotency(const FiniteAlgebra& alg, const ElementSet& universe);
std::vector<std::uint8_t> jacobson(const FiniteAlgebra& alg, const ElementSet& universe,
                                   const std::vector<std::int64_t>& inverse);
}  // namespace parallel

Scans run_scans(const FiniteAlgebra& alg, const ElementSet& universe, KernelMode mode);
ElementSet all_elements(const FiniteAlgebra& alg);

}  // namespace kernels

struct GradedWitness {
  std::uint32_t member;
  std::size_t grade_index;
  std::uint32_t component;
};

/// Exhaustive model of a finite graded ring, or of its degree-zero subring.
class FiniteRingTable {
 public:
  explicit FiniteRingTable(RingHandle ring, std::uint64_t cap = kDefaultEnumerationCap,
                           KernelMode mode = KernelMode::Parallel);

  /// The table of the degree-zero subring R_0, sharing this table's algebra.
  FiniteRingTable degree_zero() const;

  const FiniteAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const FiniteAlgebra> algebra_ptr() const { return alg_; }
  const RingHandle& ring() const { return alg_->ring(); }
  /// Elements of this (sub)ring.
  const ElementSet& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  bool is_subring_table() const { return universe_.size() != alg_->size(); }

  Element element(std::uint32_t i) const { return alg_->element(i); }
  std::uint32_t index_of(const Element& f) const { return alg_->index_of(f); }

  const ElementSet& units() const { return units_; }
  const ElementSet& nilpotents() const { return nilradical_; }
  const ElementSet& idempotents() const { return idempotents_; }
  const ElementSet& zero_divisors() const { return zero_divisors_; }
  const ElementSet& nilradical() const { return nilradical_; }
  const ElementSet& jacobson() const { return jacobson_; }
  /// Prime ideals, one per primitive idempotent, in the order of those idempotents.
  const std::vector<ElementSet>& primes() const { return primes_; }
  const ElementSet& primitive_idempotents() const { return primitive_idempotents_; }

  bool contains(const ElementSet& s, std::uint32_t a) const;
  std::optional<std::int64_t> inverse(std::uint32_t a) const;
  /// Least k with a^k = 0 (0 if not nilpotent).
  std::uint32_t nilpotency_exponent(std::uint32_t a) const { return nilpotency_[a]; }

  /// First member (in ordinal order) with a component outside `s`, if any.
  std::optional<GradedWitness> graded_witness(const ElementSet& s) const;
  bool is_graded_subset(const ElementSet& s) const { return !graded_witness(s).has_value(); }
  /// I*: the ideal generated by the homogeneous members of the ideal `s`.
  ElementSet graded_part(const ElementSet& s) const;
  /// f^k for the least k with f^k = f^(2k).
  std::uint32_t idempotent_closure(std::uint32_t f) const;

  bool is_ideal(const ElementSet& s) const;
  bool is_prime(const ElementSet& s) const;
  /// The ideal generated by `gens` inside this (sub)ring.
  ElementSet ideal_generated(const ElementSet& gens) const;
  /// {g in universe : g*f = 0}.
  ElementSet annihilator(std::uint32_t f) const;

 private:
  FiniteRingTable(std::shared_ptr<const FiniteAlgebra> alg, ElementSet universe, KernelMode mode);
  void compute();
  ElementSet additive_span(const ElementSet& gens) const;

  std::shared_ptr<const FiniteAlgebra> alg_;
  ElementSet universe_;
  KernelMode mode_;
  std::vector<std::int64_t> inverse_;
  std::vector<std::uint32_t> nilpotency_;
  ElementSet units_, idempotents_, zero_divisors_, nilradical_, jacobson_;
  ElementSet primitive_idempotents_;
  std::vector<ElementSet> primes_;
};

/// Process-wide caches keyed by ring, so repeated decisions on one finite ring
/// share a single model.
std::shared_ptr<const FiniteAlgebra> shared_algebra(const RingHandle& ring,
                                                   std::uint64_t cap = kDefaultEnumerationCap);
std::shared_ptr<const FiniteRingTable> shared_table(const RingHandle& ring,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

std::string describe_set(const FiniteRingTable& t, const ElementSet& s, std::size_t limit = 8);

}  // namespace gradedring
