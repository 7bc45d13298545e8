#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affhecke/laurent.hpp"

namespace affhecke {

using Rational = boost::multiprecision::cpp_rational;
using RVector = std::vector<Rational>;

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^cols.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds a row; returns true iff it was independent of the current basis.
  bool add(RVector row);
  bool contains(RVector row) const;
  /// Basis of the orthogonal complement {x : r . x = 0 for every row r}.
  std::vector<RVector> kernel() const;

 private:
  /// Eliminates the current pivots from row in place.
  void reduce(RVector& row) const;

  std::size_t cols_;
  std::vector<RVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<RVector>& rows, std::size_t cols);
/// Basis of {x : rows * x = 0}.
std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t cols);

/// p evaluated at v = value; value must be nonzero when p has negative exponents.
Rational evaluate(const LaurentPoly& p, const Rational& value);

}  // namespace affhecke
