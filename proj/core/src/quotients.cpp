#include "affhecke/quotients.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "affhecke/errors.hpp"
#include "affhecke/linalg.hpp"

namespace affhecke {

namespace {

void require_partition(std::span<const int> lambda) {
  if (!is_partition(lambda)) throw InvalidArgument("not a partition: " + parts_to_string(lambda));
}

// Specialization point for rank certificates. A rank computed at a point is
// a lower bound for the generic rank.
const Rational& probe_point() {
  static const Rational v(Rational(3) / Rational(7));
  return v;
}

RVector specialize(const HeckeElt& h, const std::map<AffinePerm, std::size_t>& index) {
  RVector row(index.size());
  for (const auto& [w, c] : h.terms()) row[index.at(w)] = evaluate(c, probe_point());
  return row;
}

bool supported_in(const HeckeElt& h, const std::map<AffinePerm, std::size_t>& index) {
  return std::all_of(h.terms().begin(), h.terms().end(), [&](const auto& t) { return index.contains(t.first); });
}

// Closes {seed} under left and right multiplication by the generators,
// keeping elements supported in `universe`, then counts how many T_w with
// w in `targets` lie in the resulting span. `allowed` decides whether a
// product's support is legal at all; a product failing it clears `inside`.
template <class Allowed>
SpanReport saturate(const HeckeElt& seed, const std::vector<HeckeElt>& generators, const std::vector<AffinePerm>& universe,
                    const std::vector<AffinePerm>& targets, Allowed allowed) {
  std::map<AffinePerm, std::size_t> index;
  for (const auto& w : universe) index.emplace(w, index.size());
  SpanReport report;
  report.target = targets.size();
  RowEchelon echelon(index.size());
  std::deque<HeckeElt> frontier;
  auto consider = [&](const HeckeElt& h) {
    ++report.products;
    if (!allowed(h)) {
      report.inside = false;
      return;
    }
    if (h.is_zero() || !supported_in(h, index)) return;
    if (echelon.add(specialize(h, index))) frontier.push_back(h);
  };
  consider(seed);
  while (!frontier.empty()) {
    HeckeElt h = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      consider(g * h);
      consider(h * g);
    }
  }
  for (const auto& w : targets) {
    RVector unit(index.size());
    unit[index.at(w)] = 1;
    if (echelon.contains(std::move(unit))) ++report.rank;
  }
  return report;
}

}  // namespace

IdealSpec::IdealSpec(int n, std::vector<Composition> partitions) : n_(n) {
  if (n < 1) throw InvalidArgument("ideal rank must be positive");
  if (partitions.empty()) throw InvalidArgument("ideal needs at least one partition");
  for (const auto& p : partitions) {
    if (static_cast<int>(p.size()) != n)
      throw InvalidArgument("partition " + parts_to_string(p) + " does not have length " + std::to_string(n));
    require_partition(p);
  }
  std::sort(partitions.begin(), partitions.end());
  partitions.erase(std::unique(partitions.begin(), partitions.end()), partitions.end());
  for (const auto& p : partitions) {
    bool dominated = std::any_of(partitions.begin(), partitions.end(),
                                 [&](const Composition& o) { return o != p && componentwise_geq(p, o); });
    if (!dominated) parts_.push_back(p);
  }
}

std::string IdealSpec::to_string() const {
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += ";";
    out += parts_to_string(p);
  }
  return out;
}

bool in_positive(const HeckeElt& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) { return t.first.is_positive(); });
}

bool in_ideal(const AffinePerm& w, const IdealSpec& spec) {
  if (w.rank() != spec.rank()) throw DomainMismatch("element of rank " + std::to_string(w.rank()) + " tested against ideal of rank " + std::to_string(spec.rank()));
  if (!w.is_positive()) throw NotPositive(w.to_string() + " is not in the positive cone");
  auto lambda = w.to_pair().second;
  for (auto& x : lambda) x = -x;
  const Composition d = dom(lambda);
  return std::any_of(spec.partitions().begin(), spec.partitions().end(),
                     [&](const Composition& p) { return componentwise_geq(d, p); });
}

bool ideal_supported(const HeckeElt& a, const IdealSpec& spec) {
  return std::all_of(a.terms().begin(), a.terms().end(), [&](const auto& t) { return in_ideal(t.first, spec); });
}

QuotientElt reduce(const HeckeElt& a, const IdealSpec& spec) {
  if (a.rank() != spec.rank()) throw DomainMismatch("element and ideal ranks differ");
  HeckeElt rep(a.rank());
  for (const auto& [w, c] : a.terms())
    if (!in_ideal(w, spec)) rep.add_term(w, c);
  return QuotientElt(spec, std::move(rep));
}

QuotientElt quotient_mul(const QuotientElt& a, const QuotientElt& b) {
  if (!(a.spec() == b.spec()))
    throw DomainMismatch("quotient elements for ideals " + a.spec().to_string() + " and " + b.spec().to_string());
  return reduce(a.rep() * b.rep(), a.spec());
}

HeckeElt ideal_generator(std::span<const int> lambda) {
  require_partition(lambda);
  const Composition rev = reverse_parts(lambda);
  return x_monomial(rev);
}

IdealSpec minimal_partitions(const std::vector<Composition>& dominants) {
  if (dominants.empty()) throw InvalidArgument("minimal_partitions needs a nonempty family");
  return IdealSpec(static_cast<int>(dominants.front().size()), dominants);
}

SpanReport generated_span_report(std::span<const int> lambda, int max_length) {
  require_partition(lambda);
  if (max_length < 0) throw InvalidArgument("length bound must be nonnegative");
  const int n = static_cast<int>(lambda.size());
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  const IdealSpec spec(n, {Composition(lambda.begin(), lambda.end())});
  const HeckeElt generator = ideal_generator(lambda);

  // Saturate in a wider window so that short slice elements reached only
  // through longer intermediate products are still found.
  const int gen_length = generator.terms().begin()->first.length();
  const int wide = std::max(max_length, gen_length) + n * (n - 1) / 2;
  std::vector<AffinePerm> universe, slice;
  for (auto& w : positive_elements(n, wide, size + max_length)) {
    if (w.degree() > -size || !in_ideal(w, spec)) continue;
    if (w.length() <= max_length) slice.push_back(w);
    universe.push_back(std::move(w));
  }

  std::vector<HeckeElt> generators;
  for (int i = 1; i < n; ++i) generators.push_back(t_simple(n, i));
  generators.push_back(HeckeElt::basis(AffinePerm::rho(n, -1)));

  return saturate(generator, generators, universe, slice, [&](const HeckeElt& h) {
    return in_positive(h) && ideal_supported(h, spec);
  });
}

std::vector<AffinePerm> double_coset(const AffinePerm& w) {
  std::set<AffinePerm> out;
  const auto perms = finite_perms(w.rank());
  for (const auto& a : perms)
    for (const auto& b : perms) out.insert(a * w * b);
  return {out.begin(), out.end()};
}

SpanReport double_coset_span_report(const AffinePerm& w) {
  const int n = w.rank();
  const auto coset = double_coset(w);
  const std::set<AffinePerm> members(coset.begin(), coset.end());
  std::vector<HeckeElt> generators;
  for (int i = 1; i < n; ++i) generators.push_back(t_simple(n, i));
  return saturate(t_basis(w), generators, coset, coset, [&](const HeckeElt& h) {
    return std::all_of(h.terms().begin(), h.terms().end(), [&](const auto& t) { return members.contains(t.first); });
  });
}

bool translation_double_coset_check(std::span<const int> nu) {
  for (std::size_t i = 1; i < nu.size(); ++i)
    if (nu[i] > nu[i - 1]) throw InvalidArgument("translation vector must be weakly decreasing: " + parts_to_string(nu));
  const AffinePerm t = AffinePerm::translation(nu);
  const auto coset = double_coset(t);

  // {(sigma, nu^tau)}: every permutation sigma paired with every rearrangement of nu.
  std::set<AffinePerm> expected;
  Composition arrangement(nu.begin(), nu.end());
  std::sort(arrangement.begin(), arrangement.end());
  const auto perms = finite_perms(t.rank());
  do {
    for (const auto& s : perms) expected.insert(AffinePerm::from_pair(s.window(), arrangement));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));

  if (std::set<AffinePerm>(coset.begin(), coset.end()) != expected) return false;
  return double_coset_span_report(t).ok();
}

}  // namespace affhecke
