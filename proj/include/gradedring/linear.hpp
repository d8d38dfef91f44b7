#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "gradedring/scalars.hpp"

namespace gradedring {

using Vector = std::vector<mpq_class>;

/// Reduced row echelon form over a field (Q or Z/p).
class RowEchelon {
 public:
  RowEchelon(const BaseRing& field, std::size_t columns);

  /// Inserts `row` into the span. Returns false if it was already contained.
  bool insert(Vector row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// Unique normal form of `v` modulo the span: all pivot entries cleared.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

 private:
  BaseRing field_;
  std::size_t columns_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Finds lambda with sum_i lambda_i * rows[i] = target, if one exists.
std::optional<Vector> solve_combination(const BaseRing& field, const std::vector<Vector>& rows,
                                        const Vector& target);

/// Whether `target` lies in the Z-span of `gens` (integer Hermite reduction).
bool integer_span_contains(std::vector<std::vector<mpz_class>> gens,
                           std::vector<mpz_class> target);

}  // namespace gradedring
