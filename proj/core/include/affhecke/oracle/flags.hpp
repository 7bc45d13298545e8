#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "affhecke/weyl.hpp"

namespace affhecke::oracle {

/// Largest ambient dimension and the field sizes accepted by the oracle.
inline constexpr int kMaxRank = 4;
bool supported_field(int q);
/// Throws ResourceLimit unless 1 <= n <= kMaxRank and q is supported.
void require_small(int n, int q);

/// A set of at most 128 vectors of F_q^n, one bit per encoded vector.
struct Subspace {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(int v) { (v < 64 ? lo : hi) |= std::uint64_t{1} << (v & 63); }
  bool test(int v) const { return ((v < 64 ? lo : hi) >> (v & 63)) & 1U; }
  int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
  Subspace operator&(const Subspace& o) const { return {lo & o.lo, hi & o.hi}; }
  bool subset_of(const Subspace& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// F_q^n for a prime q; the vector (x_0, ..., x_{n-1}) is encoded as sum x_k q^k.
class VectorSpace {
 public:
  VectorSpace(int n, int q);

  int rank() const { return n_; }
  int field() const { return q_; }
  int size() const { return size_; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int scale(int c, int a) const { return scale_[c * size_ + a]; }
  /// Dimension of a subspace, from its cardinality.
  int dim(const Subspace& s) const;
  /// All subspaces of the given dimension, sorted.
  const std::vector<Subspace>& subspaces(int dim) const { return by_dim_.at(dim); }
  /// Image of a vector under the matrix with columns cols (each an encoded vector).
  int apply(std::span<const int> cols, int v) const;

 private:
  int n_;
  int q_;
  int size_;
  std::vector<int> add_;
  std::vector<int> scale_;
  std::vector<std::vector<Subspace>> by_dim_;
};

/// L_1 <= L_2 <= ... <= L_k = V, one subspace per cumulative dimension.
using Flag = std::vector<Subspace>;

/// (d_1, d_1 + d_2, ..., n).
std::vector<int> cumulative_dims(std::span<const int> parts);
/// (1, ..., 1): the complete flag type.
Composition complete_type(int n);

/// Every flag whose i-th member has dimension d_1 + ... + d_i (zero parts
/// repeat a member; the last member is V), in lexicographic order.
std::vector<Flag> enumerate_flags(const VectorSpace& space, std::span<const int> parts);
/// Convenience overload with the resource guard.
std::vector<Flag> enumerate_flags(int n, int q, std::span<const int> parts);

/// The matrix dim(A_i cap B_j), row-major: a complete invariant of the
/// GL_n(F_q)-orbit of the pair (A, B).
using OrbitLabel = std::vector<std::uint8_t>;
OrbitLabel relative_position(const VectorSpace& space, const Flag& a, const Flag& b);

/// The permutation w with dim(A_i cap B_j) = #{k <= j : w(k) <= i}, for complete flags.
AffinePerm permutation_of(const OrbitLabel& label, int n);

/// Restricts a flag of type `from` to type `to`; every cumulative dimension of
/// `to` must occur in `from` (dimension 0 gives the zero subspace).
Flag forget(const Flag& flag, std::span<const int> from, std::span<const int> to);

/// Whether relative_position separates exactly the GL_n(F_q)-orbits on
/// pairs of flags of the given types, by acting with every invertible matrix.
bool labels_match_group_orbits(int n, int q, std::span<const int> left, std::span<const int> right);

}  // namespace affhecke::oracle
