#include "gradedring/linear.hpp"

#include "gradedring/errors.hpp"

namespace gradedring {

RowEchelon::RowEchelon(const BaseRing& field, std::size_t columns)
    : field_(field), columns_(columns), pivot_row_(columns, -1) {
  if (!field.is_field()) {
    throw PreconditionError("row reduction needs a field, got " + field.to_string());
  }
}

Vector RowEchelon::reduce(Vector v) const {
  if (v.size() != columns_) throw PreconditionError("vector length mismatch in row reduction");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const mpq_class factor = v[p];
    for (std::size_t c = 0; c < columns_; ++c) {
      if (rows_[r][c] != 0) v[c] = field_.sub(v[c], field_.mul(factor, rows_[r][c]));
    }
  }
  return v;
}

bool RowEchelon::contains(const Vector& v) const {
  for (const auto& x : reduce(v)) {
    if (x != 0) return false;
  }
  return true;
}

bool RowEchelon::insert(Vector row) {
  for (auto& x : row) x = field_.canonical(x);
  row = reduce(std::move(row));
  std::size_t p = 0;
  while (p < columns_ && row[p] == 0) ++p;
  if (p == columns_) return false;
  const mpq_class inv = *field_.inverse(row[p]);
  for (auto& x : row) x = field_.mul(x, inv);
  // Keep the form reduced: clear the new pivot column from older rows.
  for (auto& old : rows_) {
    if (old[p] == 0) continue;
    const mpq_class factor = old[p];
    for (std::size_t c = 0; c < columns_; ++c) {
      if (row[c] != 0) old[c] = field_.sub(old[c], field_.mul(factor, row[c]));
    }
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(row));
  return true;
}

std::optional<Vector> solve_combination(const BaseRing& field, const std::vector<Vector>& rows,
                                        const Vector& target) {
  // Augment every row with a unit vector recording its provenance.
  const std::size_t n = rows.size();
  const std::size_t width = target.size();
  RowEchelon ech(field, width + n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector aug(rows[i]);
    aug.resize(width + n, mpq_class(0));
    aug[width + i] = 1;
    ech.insert(std::move(aug));
  }
  Vector t(target);
  t.resize(width + n, mpq_class(0));
  Vector reduced = ech.reduce(std::move(t));
  for (std::size_t c = 0; c < width; ++c) {
    if (reduced[c] != 0) return std::nullopt;
  }
  // target - sum(lambda_i rows_i) now sits in the tag columns with the sign flipped.
  Vector lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = field.neg(reduced[width + i]);
  return lambda;
}

bool integer_span_contains(std::vector<std::vector<mpz_class>> gens,
                           std::vector<mpz_class> target) {
  const std::size_t width = target.size();
  std::size_t active = 0;  // rows [0, active) are pivot rows
  for (std::size_t c = 0; c < width && active < gens.size(); ++c) {
    // Euclid on column c among the remaining rows until one nonzero entry is left.
    for (;;) {
      std::size_t best = gens.size();
      for (std::size_t r = active; r < gens.size(); ++r) {
        if (gens[r][c] != 0 && (best == gens.size() || abs(gens[r][c]) < abs(gens[best][c]))) best = r;
      }
      if (best == gens.size()) break;
      std::swap(gens[active], gens[best]);
      bool done = true;
      for (std::size_t r = active + 1; r < gens.size(); ++r) {
        if (gens[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), gens[r][c].get_mpz_t(), gens[active][c].get_mpz_t());
        for (std::size_t k = c; k < width; ++k) gens[r][k] -= q * gens[active][k];
        if (gens[r][c] != 0) done = false;
      }
      if (done) {
        ++active;
        break;
      }
    }
  }
  for (std::size_t r = 0; r < active; ++r) {
    std::size_t c = 0;
    while (gens[r][c] == 0) ++c;
    if (target[c] == 0) continue;
    if (target[c] % gens[r][c] != 0) return false;
    const mpz_class q = target[c] / gens[r][c];
    for (std::size_t k = c; k < width; ++k) target[k] -= q * gens[r][k];
  }
  for (const auto& v : target) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace gradedring
