#include "affhecke/canonical.hpp"

#include <map>
#include <mutex>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

struct CanonicalCache {
  std::mutex mu;
  std::map<AffinePerm, HeckeElt> values;  // degree-0 indices only
};

CanonicalCache& canonical_cache() {
  static CanonicalCache cache;
  return cache;
}

HeckeElt b_simple(int n, int i) {
  HeckeElt b = t_simple(n, i);
  b += HeckeElt(n, 1);
  return b * vpow(1);
}

// Coefficient of v^{l(x)+1} in c_x.
std::int64_t mu_coefficient(const AffinePerm& x, const LaurentPoly& c) { return c.coeff(x.length() + 1); }

HeckeElt compute_degree_zero(const AffinePerm& w);

HeckeElt lookup_degree_zero(const AffinePerm& w) {
  auto& cache = canonical_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.values.find(w); it != cache.values.end()) return it->second;
  }
  HeckeElt b = compute_degree_zero(w);
  const std::string problem = canonical_violation({w, b});
  if (!problem.empty()) throw InternalInvariant("canonical basis element " + w.to_string() + ": " + problem);
  std::lock_guard lock(cache.mu);
  // Write-once: a concurrent computation of the same key produced the same value.
  return cache.values.try_emplace(w, std::move(b)).first->second;
}

HeckeElt compute_degree_zero(const AffinePerm& w) {
  const int n = w.rank();
  if (w.length() == 0) return HeckeElt(n, 1);
  int s = 0;
  while (!w.has_right_descent(s)) ++s;
  const AffinePerm ws = w.times_simple(s);
  const HeckeElt prev = lookup_degree_zero(ws);
  HeckeElt b = prev * b_simple(n, s);
  for (const auto& [x, c] : prev.terms()) {
    if (x == ws || !x.has_right_descent(s)) continue;
    const std::int64_t mu = mu_coefficient(x, c);
    if (mu != 0) b -= lookup_degree_zero(x) * LaurentPoly(mu);
  }
  return b;
}

}  // namespace

HeckeElt bar_involution(const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) out += invert_t(w.inverse()) * c.bar();
  return out;
}

std::string canonical_violation(const CanonicalElt& b) {
  const AffinePerm& w = b.index;
  const int l = w.length();
  if (b.value.coeff(w) != vpow(l)) return "leading coefficient is " + b.value.coeff(w).to_string() + ", expected v^" + std::to_string(l);
  for (const auto& [x, c] : b.value.terms()) {
    if (x == w) continue;
    if (!bruhat_leq(x, w)) return x.to_string() + " in the support is not below " + w.to_string();
    if (c.min_exponent() < x.length() + 1) return "coefficient of " + x.to_string() + " is " + c.to_string() + ", below v^" + std::to_string(x.length() + 1);
  }
  if (bar_involution(b.value) != b.value) return "not bar-invariant";
  return {};
}

CanonicalElt canonical_basis(const AffinePerm& w) {
  if (w.length() > kMaxCanonicalLength)
    throw ResourceLimit("canonical basis requested for length " + std::to_string(w.length()) + " > " + std::to_string(kMaxCanonicalLength));
  const int z = w.degree();
  const AffinePerm base = w * AffinePerm::rho(w.rank(), -z);
  HeckeElt b = lookup_degree_zero(base);
  if (z != 0) b = b.times_rho(z);
  return {w, std::move(b)};
}

std::vector<CanonicalElt> positive_canonical_basis(int n, int max_length, int max_neg_degree) {
  if (n < 1 || max_length < 0 || max_neg_degree < 0) throw InvalidArgument("positive_canonical_basis needs n >= 1 and nonnegative bounds");
  if (max_length > kMaxCanonicalLength) throw ResourceLimit("length bound " + std::to_string(max_length) + " exceeds " + std::to_string(kMaxCanonicalLength));
  std::vector<CanonicalElt> out;
  for (const auto& w : positive_elements(n, max_length, max_neg_degree)) {
    CanonicalElt b = canonical_basis(w);
    if (!in_positive(b.value)) throw InternalInvariant("b_" + w.to_string() + " leaves the positive cone");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<QuotientBasisElt> quotient_canonical_basis(const IdealSpec& spec, int max_length, int max_neg_degree) {
  std::vector<QuotientBasisElt> out;
  for (auto& b : positive_canonical_basis(spec.rank(), max_length, max_neg_degree)) {
    QuotientElt z = reduce(b.value, spec);
    const bool killed = in_ideal(b.index, spec);
    if (killed != z.is_zero())
      throw InternalInvariant("b_" + b.index.to_string() + (killed ? " survives" : " dies") + " in the quotient by " + spec.to_string());
    if (!killed) out.push_back({b.index, std::move(z)});
  }
  return out;
}

}  // namespace affhecke
