#pragma once

#include <string>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/quotients.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

/// Kazhdan-Lusztig basis element b_w.
struct CanonicalElt {
  AffinePerm index;
  HeckeElt value;
};

/// Elements longer than this are refused with ResourceLimit.
inline constexpr int kMaxCanonicalLength = 12;

/// Semilinear ring involution: v -> v^-1 on scalars and T_w -> T_{w^-1}^-1.
HeckeElt bar_involution(const HeckeElt& a);

/// The unique bar-invariant b_w = v^{l(w)} T_w + sum_{x < w} c_x T_x with
/// c_x in v^{l(x)+1} Z[v]. Normalized so that b_s = v (T_s + 1), and
/// b_{w' rho^z} = b_{w'} T_{rho^z}. Results are memoized (thread-safe) and
/// verified before being returned; a failed check raises InternalInvariant.
CanonicalElt canonical_basis(const AffinePerm& w);

/// Empty when b satisfies bar-invariance, the Bruhat triangularity and the
/// valuation bounds; otherwise a description of the first violation.
std::string canonical_violation(const CanonicalElt& b);

/// b_w for every positive w with l(w) <= max_length and degree(w) >= -max_neg_degree,
/// in the order of positive_elements. Each has positive support (checked).
std::vector<CanonicalElt> positive_canonical_basis(int n, int max_length, int max_neg_degree);

struct QuotientBasisElt {
  AffinePerm index;
  QuotientElt value;
};

/// The nonzero images of positive_canonical_basis in the quotient. Checks
/// that b_w dies exactly when w is in the ideal, and then that b_w is
/// supported in the ideal.
std::vector<QuotientBasisElt> quotient_canonical_basis(const IdealSpec& spec, int max_length, int max_neg_degree);

}  // namespace affhecke
