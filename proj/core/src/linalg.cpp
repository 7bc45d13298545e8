#include "affhecke/linalg.hpp"

#include <utility>

#include "affhecke/errors.hpp"

namespace affhecke {

void RowEchelon::reduce(RVector& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t c = 0; c < cols_; ++c)
      if (rows_[k][c] != 0) row[c] -= factor * rows_[k][c];
  }
}

bool RowEchelon::add(RVector row) {
  if (row.size() != cols_) throw DomainMismatch("row of width " + std::to_string(row.size()) + ", expected " + std::to_string(cols_));
  reduce(row);
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  const Rational lead = row[p];
  for (auto& x : row) x /= lead;
  // Keep the basis fully reduced so that reduce() needs a single pass.
  for (auto& existing : rows_) {
    if (existing[p] == 0) continue;
    const Rational factor = existing[p];
    for (std::size_t c = 0; c < cols_; ++c)
      if (row[c] != 0) existing[c] -= factor * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowEchelon::contains(RVector row) const {
  if (row.size() != cols_) throw DomainMismatch("row width mismatch");
  reduce(row);
  for (const auto& x : row)
    if (x != 0) return false;
  return true;
}

std::size_t rank(const std::vector<RVector>& rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& r : rows) ech.add(r);
  return ech.rank();
}

std::vector<RVector> RowEchelon::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RVector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RVector x(cols_);
    x[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = -rows_[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& r : rows) ech.add(r);
  return ech.kernel();
}

Rational evaluate(const LaurentPoly& p, const Rational& value) {
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 && value == 0) throw InvalidArgument("negative power of v evaluated at 0");
    Rational base = e >= 0 ? value : Rational(1) / value;
    Rational term = 1;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) term *= base;
    out += term * Rational(c);
  }
  return out;
}

}  // namespace affhecke
