#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "affhecke/linalg.hpp"
#include "affhecke/oracle/flags.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke::oracle {

/// Types of the two factors of a product of flag varieties Y_left x Y_right.
struct Domain {
  Composition left;
  Composition right;

  std::string to_string() const;
  friend bool operator==(const Domain&, const Domain&) = default;
  friend auto operator<=>(const Domain&, const Domain&) = default;
};

/// G-invariant function on Y_left x Y_right, one value per orbit.
struct OrbitFunction {
  Domain domain;
  std::vector<Rational> values;

  bool is_zero() const;
  friend bool operator==(const OrbitFunction&, const OrbitFunction&) = default;
};

/// Flag varieties of F_q^n with their orbit decompositions and convolution
/// structure constants. Tables are built on first use and never modified
/// afterwards; concurrent callers are safe.
class Geometry {
 public:
  /// threads > 1 splits structure-constant sweeps; results do not depend on it.
  Geometry(int n, int q, unsigned threads = 1);
  Geometry(const Geometry&) = delete;
  Geometry& operator=(const Geometry&) = delete;

  int rank() const { return space_.rank(); }
  int field() const { return space_.field(); }
  const VectorSpace& space() const { return space_; }
  Composition complete() const { return complete_type(rank()); }

  const std::vector<Flag>& flags(const Composition& type);
  std::size_t orbit_count(const Domain& d);
  const OrbitLabel& orbit_label(const Domain& d, std::size_t orbit);
  std::size_t orbit_of(const Domain& d, const Flag& a, const Flag& b);
  /// A pair (a, b) in the orbit; a is always the first flag of type d.left.
  std::pair<Flag, Flag> orbit_representative(const Domain& d, std::size_t orbit);

  OrbitFunction zero(const Domain& d);
  OrbitFunction indicator(const Domain& d, std::size_t orbit);
  /// f * g(a, c) = sum_b f(a, b) g(b, c); throws DomainMismatch unless f.right == g.left.
  OrbitFunction convolve(const OrbitFunction& f, const OrbitFunction& g);
  /// Number of b with (a, b) in o1 and (b, c) in o2, for any (a, c) in o3.
  std::int64_t structure_constant(const Composition& p, const Composition& m, const Composition& r, std::size_t o1,
                                  std::size_t o2, std::size_t o3);
  /// Indicator of the graph {(phi(y), y)} of the forgetful map Y_from -> Y_to,
  /// a function on Y_to x Y_from.
  OrbitFunction graph(const Composition& to, const Composition& from);

  /// Orbits of X x X (X the complete flags) as permutations.
  AffinePerm permutation(std::size_t orbit);
  std::size_t orbit_of_permutation(const AffinePerm& w);

 private:
  struct PairOrbits {
    std::vector<OrbitLabel> labels;
    std::map<OrbitLabel, std::size_t> index;
    std::vector<std::size_t> rep;  // right flag paired with the base left flag
  };
  struct Structure {
    std::size_t n1 = 0, n2 = 0, n3 = 0;
    std::vector<std::int64_t> counts;  // [(o1 * n2 + o2) * n3 + o3]
  };

  const PairOrbits& pair_orbits(const Domain& d);
  const Structure& structure(const Composition& p, const Composition& m, const Composition& r);

  VectorSpace space_;
  unsigned threads_;
  std::mutex mu_;
  std::map<Composition, std::unique_ptr<std::vector<Flag>>> flags_;
  std::map<Domain, std::unique_ptr<PairOrbits>> orbits_;
  std::map<std::tuple<Composition, Composition, Composition>, std::unique_ptr<Structure>> structures_;
};

/// Subsets I of the simple reflections {s_1, ..., s_{n-1}} are bitmasks, bit
/// i-1 standing for s_i. Y_I keeps the members of a complete flag whose
/// dimension k has s_k outside I.
Composition subset_type(int n, unsigned subset);
/// Subsets with |I| >= n - d, in increasing numeric order.
std::vector<unsigned> admissible_subsets(int n, int d);

/// theta_I(f) = 1_{graph of phi_I} * f, from X x X to Y_I x X.
OrbitFunction theta(Geometry& geo, const OrbitFunction& f, unsigned subset);
/// theta_{I,J}(g) = 1_{graph of phi_{I,J}} * g, from Y_I x X to Y_J x X;
/// throws InvalidArgument unless I is contained in J.
OrbitFunction theta_between(Geometry& geo, const OrbitFunction& g, unsigned from, unsigned to);

using Family = std::map<unsigned, OrbitFunction>;
/// (theta_I(f)) over the admissible I.
Family theta_family(Geometry& geo, const OrbitFunction& f, int d);
/// m_I(w): number of complete flags over a fixed point of Y_I lying in relative
/// position w to a fixed flag, taken over a pair in the orbit of W_I w.
std::int64_t fiber_multiplicity(Geometry& geo, unsigned subset, const AffinePerm& w);
/// A function f on X x X with theta_I(f) = f_I for every admissible I. Values
/// on elements that are of maximal length in no admissible coset W_I w are
/// set to 0; the others are solved for by increasing length. Throws
/// IncompatibleFamily if theta_{I,J}(f_I) != f_J for some I in J, and
/// InvalidArgument if an admissible I is missing.
OrbitFunction lift_family(Geometry& geo, int d, const Family& family);

/// Outcome of an oracle verification.
struct Report {
  std::string claim;
  bool ok = true;
  std::vector<std::pair<std::string, long long>> dims;
  std::vector<std::string> mismatches;

  void fail(std::string message) {
    ok = false;
    mismatches.push_back(std::move(message));
  }
  std::string to_text() const;
};

/// Row of a structure-constant table: 1_row * 1_col has coefficient value on result.
struct StructureEntry {
  AffinePerm row;
  AffinePerm col;
  AffinePerm result;
  std::int64_t coefficient;
};
/// Nonzero structure constants of the convolution algebra of X x X.
std::vector<StructureEntry> hecke_structure_table(Geometry& geo);

/// Compares all structure constants of the convolution algebra of X x X with
/// T-basis products in the Hecke algebra at v^-2 = q.
Report verify_hecke_iso(int n, int q, unsigned threads = 1);
/// Builds A = C(Y x Y), B = C(X x X) acting on C = C(Y x X) and compares the
/// images with the commutants End_B(C), End_A(C). For d >= n both maps must be
/// bijective; for d < n the map from B must be onto, and its kernel dimension
/// is reported as "kernel_B".
Report bicommutant_check(int n, int d, int q, unsigned threads = 1);
/// For every pair of components Y_j, Y_i of Y: the image of psi_i in
/// C(Y_j x X) is exactly {h : h * 1_{Z_i} = m_i h}.
Report psi_image_check(int n, int d, int q, unsigned threads = 1);
/// Lifts trials random families theta(g) and checks theta_I(lift) = theta_I(g).
Report lift_trials(int n, int d, int q, int trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace affhecke::oracle
