#include <omp.h>

#include <bit>

#include "gradedring/oracle.hpp"

namespace gradedring::kernels {

namespace {

std::int64_t find_inverse(const FiniteAlgebra& alg, const ElementSet& universe, std::uint32_t a) {
  const auto ma = alg.multiplier(a);
  for (auto b : universe) {
    if (ma(b) == alg.one()) return b;
  }
  return -1;
}

std::uint8_t has_zero_partner(const FiniteAlgebra& alg, const ElementSet& universe,
                              std::uint32_t a) {
  const auto ma = alg.multiplier(a);
  for (auto b : universe) {
    if (b != 0 && ma(b) == 0) return 1;
  }
  return 0;
}

std::uint32_t nilpotency_of(const FiniteAlgebra& alg, std::uint32_t a) {
  // The nilpotency index is bounded by the composition length, at most log2 |R|.
  const std::uint32_t bound = static_cast<std::uint32_t>(std::bit_width(alg.size())) + 1;
  std::uint32_t p = a;
  for (std::uint32_t k = 1; k <= bound; ++k) {
    if (p == 0) return k;
    p = alg.mul(p, a);
  }
  return 0;
}

std::vector<std::uint8_t> unit_flags(const FiniteAlgebra& alg, const ElementSet& universe,
                                     const std::vector<std::int64_t>& inverse) {
  std::vector<std::uint8_t> flag(alg.size(), 0);
  for (std::size_t p = 0; p < universe.size(); ++p) flag[universe[p]] = inverse[p] >= 0;
  return flag;
}

std::uint8_t radical_member(const FiniteAlgebra& alg, const ElementSet& universe,
                            const std::vector<std::uint8_t>& unit, std::uint32_t a) {
  const auto ma = alg.multiplier(a);
  for (auto r : universe) {
    if (!unit[alg.add(alg.one(), ma(r))]) return 0;
  }
  return 1;
}

}  // namespace

ElementSet all_elements(const FiniteAlgebra& alg) {
  ElementSet all(alg.size());
  for (std::uint32_t i = 0; i < alg.size(); ++i) all[i] = i;
  return all;
}

namespace serial {

std::vector<std::int64_t> unit_inverses(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::int64_t> out(universe.size());
  for (std::size_t p = 0; p < universe.size(); ++p) out[p] = find_inverse(alg, universe, universe[p]);
  return out;
}

std::vector<std::uint8_t> zero_divisors(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint8_t> out(universe.size());
  for (std::size_t p = 0; p < universe.size(); ++p) {
    out[p] = has_zero_partner(alg, universe, universe[p]);
  }
  return out;
}

std::vector<std::uint8_t> idempotents(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint8_t> out(universe.size());
  for (std::size_t p = 0; p < universe.size(); ++p) {
    out[p] = alg.mul(universe[p], universe[p]) == universe[p];
  }
  return out;
}

std::vector<std::uint32_t> nilpotency(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint32_t> out(universe.size());
  for (std::size_t p = 0; p < universe.size(); ++p) out[p] = nilpotency_of(alg, universe[p]);
  return out;
}

std::vector<std::uint8_t> jacobson(const FiniteAlgebra& alg, const ElementSet& universe,
                                   const std::vector<std::int64_t>& inverse) {
  const auto unit = unit_flags(alg, universe, inverse);
  std::vector<std::uint8_t> out(universe.size());
  for (std::size_t p = 0; p < universe.size(); ++p) {
    out[p] = radical_member(alg, universe, unit, universe[p]);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::int64_t> unit_inverses(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::int64_t> out(universe.size());
  const auto n = static_cast<std::int64_t>(universe.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t p = 0; p < n; ++p) out[p] = find_inverse(alg, universe, universe[p]);
  return out;
}

std::vector<std::uint8_t> zero_divisors(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint8_t> out(universe.size());
  const auto n = static_cast<std::int64_t>(universe.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t p = 0; p < n; ++p) out[p] = has_zero_partner(alg, universe, universe[p]);
  return out;
}

std::vector<std::uint8_t> idempotents(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint8_t> out(universe.size());
  const auto n = static_cast<std::int64_t>(universe.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < n; ++p) out[p] = alg.mul(universe[p], universe[p]) == universe[p];
  return out;
}

std::vector<std::uint32_t> nilpotency(const FiniteAlgebra& alg, const ElementSet& universe) {
  std::vector<std::uint32_t> out(universe.size());
  const auto n = static_cast<std::int64_t>(universe.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < n; ++p) out[p] = nilpotency_of(alg, universe[p]);
  return out;
}

std::vector<std::uint8_t> jacobson(const FiniteAlgebra& alg, const ElementSet& universe,
                                   const std::vector<std::int64_t>& inverse) {
  const auto unit = unit_flags(alg, universe, inverse);
  std::vector<std::uint8_t> out(universe.size());
  const auto n = static_cast<std::int64_t>(universe.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t p = 0; p < n; ++p) out[p] = radical_member(alg, universe, unit, universe[p]);
  return out;
}

}  // namespace parallel

Scans run_scans(const FiniteAlgebra& alg, const ElementSet& universe, KernelMode mode) {
  Scans s;
  if (mode == KernelMode::Serial) {
    s.inverse = serial::unit_inverses(alg, universe);
    s.zero_divisor = serial::zero_divisors(alg, universe);
    s.idempotent = serial::idempotents(alg, universe);
    s.nilpotency = serial::nilpotency(alg, universe);
    s.jacobson = serial::jacobson(alg, universe, s.inverse);
  } else {
    s.inverse = parallel::unit_inverses(alg, universe);
    s.zero_divisor = parallel::zero_divisors(alg, universe);
    s.idempotent = parallel::idempotents(alg, universe);
    s.nilpotency = parallel::nilpotency(alg, universe);
    s.jacobson = parallel::jacobson(alg, universe, s.inverse);
  }
  return s;
}

}  // namespace gradedring::kernels
