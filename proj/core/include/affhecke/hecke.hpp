#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "affhecke/laurent.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

/// Element of the extended affine Hecke algebra in the standard basis T_w.
///
/// Relations: T_w T_w' = T_ww' when lengths add, and
/// (T_s + 1)(T_s - v^-2) = 0, i.e. T_s^2 = (v^-2 - 1) T_s + v^-2.
class HeckeElt {
 public:
  using TermMap = std::map<AffinePerm, LaurentPoly>;

  explicit HeckeElt(int n) : n_(n) {}
  HeckeElt(int n, LaurentPoly scalar);

  static HeckeElt basis(const AffinePerm& w, LaurentPoly coeff = 1);

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffinePerm& w) const;
  bool is_single_term() const { return terms_.size() == 1; }

  /// Adds c * T_w, dropping the entry if it cancels.
  void add_term(const AffinePerm& w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt operator-() const;
  HeckeElt& operator*=(const LaurentPoly& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const LaurentPoly& c) { return a *= c; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt a) { return a *= c; }
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

  /// this * T_{s_i}.
  HeckeElt times_simple(int i) const;
  /// this * T_{rho^k}.
  HeckeElt times_rho(int k) const;
  /// this * T_w, expanding w along its reduced word.
  HeckeElt times_basis(const AffinePerm& w) const;

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  /// "(v^-2-1)*T[s1] + v^-2*T[]": terms by length descending then window.
  std::string to_string() const;

 private:
  void require_rank(const HeckeElt& other) const;

  int n_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const HeckeElt& h);

HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
inline HeckeElt t_basis(const AffinePerm& w) { return HeckeElt::basis(w); }
/// v^{-l(w)} T_w.
HeckeElt t_tilde(const AffinePerm& w);
/// T_{s_i} for 1 <= i < n (also accepts i = 0).
HeckeElt t_simple(int n, int i);
/// Two-sided inverse of T_w.
HeckeElt invert_t(const AffinePerm& w);

/// Bernstein elements. X_n = v^{1-n} T_rho^{-1} T_1 ... T_{n-1} is a single
/// T-term on the translation (0, ..., 0, -1); the others follow from
/// T_i X_i T_i = v^-2 X_{i+1}. They commute pairwise, lie in the positive
/// subalgebra, and for a dominant l, X_1^{l_n} ... X_n^{l_1} is the single term
/// v^{-l(t) - 4 n(l)} T_t at t = (Id, -(l_n, ..., l_1)), n(l) = sum (i-1) l_i.
/// Throws InvalidArgument for i outside [1, n].
HeckeElt x_element(int n, int i);
/// X_i^{-1} in the full affine Hecke algebra.
HeckeElt x_element_inverse(int n, int i);
/// X_1^{mu_1} ... X_n^{mu_n}; throws InvalidArgument on a negative exponent.
HeckeElt x_monomial(std::span<const int> mu);

/// True iff p is a Laurent polynomial in q = v^-2 (all exponents even).
bool is_even_laurent(const LaurentPoly& p);

}  // namespace affhecke
