#pragma once

#include <gmpxx.h>

#include "gradedring/algebra.hpp"

namespace gradedring {

/// Structure constants of a finite ring over its finite additive basis.
/// Basis names are the printed basis monomials.
Ring::Tabulation tabulate(const RingHandle& ring);

/// R x S for finite N-graded rings of rank-1 grading. R keeps its grades,
/// S is placed in non-positive degrees, and the degree-0 part is R_0 x S_0.
RingHandle product_ring(const RingHandle& r, const RingHandle& s);

/// Nagata idealization R ⋉ M with M = cR, the ideal generated by the scalar c,
/// graded as a submodule of R. R must be finite and free over its base Z/n.
RingHandle trivial_extension(const RingHandle& r, const mpz_class& c);

/// Associated graded ring of the (g)-adic filtration of Z/n; degree k holds
/// (g^k)/(g^(k+1)).
RingHandle associated_graded(const mpz_class& n, const mpz_class& g);

/// base[Z/m] presented as base[g]/(g^m - 1) with g of degree 1 in Z/m.
RingHandle group_ring(const BaseRing& base, std::int64_t m);

}  // namespace gradedring
