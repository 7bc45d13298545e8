#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke {

/// A finite family of partitions of length n, kept as the antichain of its
/// componentwise-minimal members (sorted, duplicate-free). Describes the
/// two-sided ideal I = sum of the I_lambda.
class IdealSpec {
 public:
  /// Validates and normalizes; throws InvalidArgument on an empty family,
  /// a length other than n, or a non-dominant member.
  IdealSpec(int n, std::vector<Composition> partitions);

  int rank() const { return n_; }
  const std::vector<Composition>& partitions() const { return parts_; }

  /// "2,1,0;1,1,1".
  std::string to_string() const;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

 private:
  int n_;
  std::vector<Composition> parts_;
};

/// Element of the quotient of the positive part by an ideal, stored through
/// its canonical representative (no term indexed by the ideal).
class QuotientElt {
 public:
  const IdealSpec& spec() const { return spec_; }
  const HeckeElt& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const QuotientElt&, const QuotientElt&) = default;
  friend QuotientElt reduce(const HeckeElt& a, const IdealSpec& spec);

 private:
  QuotientElt(IdealSpec spec, HeckeElt rep) : spec_(std::move(spec)), rep_(std::move(rep)) {}

  IdealSpec spec_;
  HeckeElt rep_;
};

/// Every support element lies in the positive cone.
bool in_positive(const HeckeElt& a);

/// w = (sigma, -mu) with dom(mu) >= lambda for some lambda in spec.
/// Throws NotPositive for w outside the positive cone, DomainMismatch on rank.
bool in_ideal(const AffinePerm& w, const IdealSpec& spec);
/// All support elements are in the ideal.
bool ideal_supported(const HeckeElt& a, const IdealSpec& spec);

/// The quotient map: drops ideal terms. Throws NotPositive unless in_positive(a).
QuotientElt reduce(const HeckeElt& a, const IdealSpec& spec);
/// Throws DomainMismatch when the specs differ.
QuotientElt quotient_mul(const QuotientElt& a, const QuotientElt& b);

/// X^{lambda'} = x_monomial(reverse(lambda)); throws InvalidArgument unless
/// lambda is a partition.
HeckeElt ideal_generator(std::span<const int> lambda);

/// Componentwise-minimal members; throws InvalidArgument on a non-dominant
/// member, mixed lengths, or an empty input.
IdealSpec minimal_partitions(const std::vector<Composition>& dominants);

/// Outcome of a slice-wise span computation.
struct SpanReport {
  bool inside = true;          // every product stayed within the claimed support
  std::size_t target = 0;      // size of the claimed basis slice
  std::size_t rank = 0;        // slice elements T_w certified to lie in the span
  std::size_t products = 0;    // products examined during saturation
  bool ok() const { return inside && rank == target; }
};

/// Checks, on the slice of ideal elements with l <= max_length and
/// -|lambda| - max_length <= degree <= -|lambda|, that the two-sided multiples
/// of X^{lambda'} by the positive generators T_1..T_{n-1}, T_rho^-1 stay in the
/// ideal and span every T_w of the slice. Saturation runs in a wider length
/// window; membership is certified exactly over the fraction field by
/// specializing v to a rational.
SpanReport generated_span_report(std::span<const int> lambda, int max_length);
inline bool generated_span_check(std::span<const int> lambda, int max_length) {
  return generated_span_report(lambda, max_length).ok();
}

/// The double coset S_n w S_n.
std::vector<AffinePerm> double_coset(const AffinePerm& w);
/// H_n T_w H_n is spanned by T_x for x in S_n w S_n, and by nothing else.
SpanReport double_coset_span_report(const AffinePerm& w);
/// For a dominant nu: the double coset of (Id, nu) is {(sigma, nu^tau)} and
/// H_n T_(Id,nu) H_n is its span.
bool translation_double_coset_check(std::span<const int> nu);

}  // namespace affhecke
