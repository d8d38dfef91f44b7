#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradedring/oracle.hpp"

namespace gradedring {

/// A partition of prime indices into blocks; blocks and their members are sorted.
using Partition = std::vector<std::vector<std::size_t>>;

struct PierceData {
  const FiniteRingTable* table = nullptr;
  ElementSet idempotents;
  ElementSet primitive_idempotents;
  /// Distinct ideals p_* (generated by the idempotents in p), in order of first appearance.
  std::vector<ElementSet> max_regular_ideals;
  /// For each prime of the table, the index of its p_* in max_regular_ideals.
  std::vector<std::size_t> regular_of_prime;
  /// Prime indices grouped by V(p_*).
  Partition components_spec;
  /// Graded prime indices grouped the same way.
  Partition components_spec_star;
};

PierceData pierce_spectrum(const FiniteRingTable& t);

struct GradedPrimes {
  /// Indices into t.primes() of the graded primes.
  std::vector<std::size_t> graded;
  std::vector<std::size_t> minimal;
  /// Non-graded primes with the member whose component escapes them.
  std::vector<std::pair<std::size_t, GradedWitness>> witnesses;
};

/// For torsion-free gradings, asserts that every minimal prime is graded.
GradedPrimes graded_primes(const FiniteRingTable& t);

struct Pi0Report {
  std::size_t spec_components = 0;
  std::size_t spec_r0_components = 0;
  std::size_t spec_star_components = 0;
  Partition spec;
  Partition spec_r0;
  Partition spec_star;
  /// Component of Spec(R) -> component of Spec(R_0) via p -> p ∩ R_0.
  std::vector<std::size_t> to_r0;
  /// Component of Spec(R) -> component of Spec*(R) it contains.
  std::vector<std::size_t> to_star;
  bool idempotents_in_r0 = false;
  bool idempotent_sets_agree = false;
};

/// Throws PreconditionError unless the grading is torsion-free, and
/// TheoremViolation if any check fails.
Pi0Report pi0_equivalences(const FiniteRingTable& t);

struct LaurentPrime {
  /// The prime p with graded prime sqrt(pR); p = n when n is prime, giving (0).
  mpz_class p;
  /// Generator d of the degree-zero part (d) of Z_n.
  mpz_class degree_zero_generator;
  std::string description;
};

struct LaurentReport {
  mpz_class n;
  std::vector<LaurentPrime> graded_primes;
  /// Spec(Z_n) as the primes dividing n.
  std::vector<mpz_class> spec_base;
  bool bijection = false;
  /// Whether primality of every candidate degree-zero ideal was checked by scanning Z_n.
  bool exhaustive = false;
};

/// Graded spectrum of Z_n[x, x^-1], computed symbolically.
LaurentReport laurent_spec_star(const mpz_class& n);

struct ProjCertificate {
  std::size_t generator;
  unsigned exponent;
  /// x^exponent = sum_i multipliers[i] * gens[i].
  std::vector<Element> multipliers;
};

struct ProjResult {
  bool quasi_compact = false;
  std::vector<ProjCertificate> certificates;
  /// Generators with no power in (gens) up to the cap.
  std::vector<std::size_t> unresolved;
  unsigned degree_cap = 0;
  std::string note;
};

ProjResult proj_quasicompact(const RingHandle& ring, const std::vector<Element>& gens,
                             unsigned degree_cap);

/// Re-expands every certificate.
bool verify(const ProjResult& r, const RingHandle& ring, const std::vector<Element>& gens);

}  // namespace gradedring
