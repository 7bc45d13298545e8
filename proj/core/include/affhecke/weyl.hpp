#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace affhecke {

/// Element of the extended affine symmetric group of rank n.
///
/// A bijection w of Z with w(i + n) = w(i) + n, stored through its window
/// (w(1), ..., w(n)). Products follow the functional convention
/// (u * w)(x) = u(w(x)), so that rho^-1 s_i rho = s_{i-1}.
class AffinePerm {
 public:
  /// Identity of rank n.
  explicit AffinePerm(int n);
  /// Throws InvalidArgument unless the residues mod n are pairwise distinct.
  explicit AffinePerm(std::vector<int> window);

  static AffinePerm identity(int n) { return AffinePerm(n); }
  /// s_i for 0 <= i < n (s_0 is the affine reflection).
  static AffinePerm simple(int n, int i);
  /// rho^k, where rho(i) = i + 1.
  static AffinePerm rho(int n, int k = 1);
  /// Pure translation: the pair (Id, lambda).
  static AffinePerm translation(std::span<const int> lambda);
  /// Inverse of to_pair: w(i) = sigma(i) + n * lambda[sigma(i)], 1-based sigma values.
  static AffinePerm from_pair(std::span<const int> sigma, std::span<const int> lambda);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// w(x) for arbitrary x in Z.
  int operator()(int x) const;

  AffinePerm inverse() const;
  friend AffinePerm operator*(const AffinePerm& u, const AffinePerm& w);

  /// Swaps positions i, i+1 of the window, i.e. w * s_i.
  AffinePerm times_simple(int i) const;
  /// s_i * w.
  AffinePerm simple_times(int i) const;

  /// (sigma, lambda) with w(i) = sigma(i) + n * lambda[sigma(i)]; sigma is 1-based.
  std::pair<std::vector<int>, std::vector<int>> to_pair() const;

  /// Number of inversions (i, j), 1 <= i <= n, i < j, w(i) > w(j).
  int length() const;
  /// (sum w(i) - sum i) / n; the exponent z in w = w' rho^z.
  int degree() const;
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;
  /// All window values <= n (the cone S_n x Z_-^n).
  bool is_positive() const;
  bool is_finite_perm() const;  // window is a permutation of 1..n

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;

  /// "w[a1,...,an]".
  std::string to_string() const;

 private:
  std::vector<int> window_;
};

std::ostream& operator<<(std::ostream& os, const AffinePerm& w);

/// Letter of a word: a simple reflection s_i, or rho^{+1} / rho^{-1}.
struct Letter {
  enum class Kind : std::uint8_t { Simple, Rho, RhoInv };
  Kind kind = Kind::Simple;
  int index = 0;  // meaningful for Simple only

  static Letter s(int i) { return {Kind::Simple, i}; }
  static Letter r() { return {Kind::Rho, 0}; }
  static Letter r_inv() { return {Kind::RhoInv, 0}; }
  bool is_simple() const { return kind == Kind::Simple; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word over {s_0, ..., s_{n-1}, rho, rho^-1}, read left to right as a product.
struct Word {
  int n = 0;
  std::vector<Letter> letters;

  AffinePerm evaluate() const;
  int simple_count() const;
  int count(Letter::Kind kind) const;
  /// "s1 s0 r-" syntax; the empty word renders as "".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Parses "s1 s0 r r-" for rank n; throws ParseError.
Word parse_word(int n, const std::string& text);
/// Parses "w[a1,...,an]"; throws ParseError.
AffinePerm parse_window(const std::string& text);

/// s_{i_1} ... s_{i_k} rho^z with k = l(w) and z = degree(w).
Word reduced_word(const AffinePerm& w);

/// Reduced word over {s_1, ..., s_{n-1}, rho^-1} only; throws NotPositive
/// unless w.is_positive(). Follows the induction on (length, degree): right
/// descents s_i with i != 0 are stripped directly, and a right descent at
/// s_0 is traded through w = (w s_0 rho) rho^-1 s_0 = (w s_0 rho) s_{n-1} rho^-1.
Word positive_reduced_word(const AffinePerm& w);

/// Bruhat order on the extended group: comparable only within a degree coset.
/// Throws DomainMismatch on rank mismatch.
bool bruhat_leq(const AffinePerm& x, const AffinePerm& w);

/// Elements of the degree-0 Coxeter subgroup of length <= max_length.
std::vector<AffinePerm> coxeter_ball(int n, int max_length);
/// Positive elements w with l(w) <= max_length and -max_neg_degree <= degree(w) <= 0,
/// sorted by (length, degree descending, window).
std::vector<AffinePerm> positive_elements(int n, int max_length, int max_neg_degree);
/// All n! elements of the finite symmetric group, sorted by length then window.
std::vector<AffinePerm> finite_perms(int n);

// Composition / partition utilities.
using Composition = std::vector<int>;

bool is_partition(std::span<const int> parts);
/// Weakly decreasing rearrangement; throws InvalidArgument on a negative part.
Composition dom(std::span<const int> mu);
Composition reverse_parts(std::span<const int> lambda);
/// Componentwise a >= b (equal lengths required).
bool componentwise_geq(std::span<const int> a, std::span<const int> b);
/// (1, ..., 1, 0, ..., 0) with n ones and d - n zeros; requires d >= n.
Composition omega(int n, int d);
/// All compositions of n into d nonnegative parts, lexicographically descending.
std::vector<Composition> compositions(int n, int d);
/// "2,1,0"; throws ParseError.
Composition parse_parts(const std::string& text);
std::string parts_to_string(std::span<const int> parts);

}  // namespace affhecke
