#include "affhecke/oracle/convolution.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <thread>

#include "affhecke/errors.hpp"
#include "affhecke/hecke.hpp"

namespace affhecke::oracle {

std::string Domain::to_string() const { return "(" + parts_to_string(left) + ") x (" + parts_to_string(right) + ")"; }

bool OrbitFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; });
}

Geometry::Geometry(int n, int q, unsigned threads) : space_(n, q), threads_(std::max(1U, threads)) {}

const std::vector<Flag>& Geometry::flags(const Composition& type) {
  {
    std::lock_guard lock(mu_);
    if (auto it = flags_.find(type); it != flags_.end()) return *it->second;
  }
  auto built = std::make_unique<std::vector<Flag>>(enumerate_flags(space_, type));
  std::lock_guard lock(mu_);
  return *flags_.try_emplace(type, std::move(built)).first->second;
}

const Geometry::PairOrbits& Geometry::pair_orbits(const Domain& d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = orbits_.find(d); it != orbits_.end()) return *it->second;
  }
  const auto& left = flags(d.left);
  const auto& right = flags(d.right);
  auto built = std::make_unique<PairOrbits>();
  // The group is transitive on each flag variety, so pairs with a fixed
  // first member meet every orbit.
  for (std::size_t j = 0; j < right.size(); ++j) {
    OrbitLabel label = relative_position(space_, left.front(), right[j]);
    auto [it, fresh] = built->index.try_emplace(label, built->labels.size());
    if (fresh) {
      built->labels.push_back(std::move(label));
      built->rep.push_back(j);
    }
  }
  std::lock_guard lock(mu_);
  return *orbits_.try_emplace(d, std::move(built)).first->second;
}

std::size_t Geometry::orbit_count(const Domain& d) { return pair_orbits(d).labels.size(); }

const OrbitLabel& Geometry::orbit_label(const Domain& d, std::size_t orbit) { return pair_orbits(d).labels.at(orbit); }

std::size_t Geometry::orbit_of(const Domain& d, const Flag& a, const Flag& b) {
  const auto& po = pair_orbits(d);
  auto it = po.index.find(relative_position(space_, a, b));
  if (it == po.index.end()) throw InternalInvariant("pair of flags with an unseen relative position in " + d.to_string());
  return it->second;
}

std::pair<Flag, Flag> Geometry::orbit_representative(const Domain& d, std::size_t orbit) {
  const auto& po = pair_orbits(d);
  return {flags(d.left).front(), flags(d.right).at(po.rep.at(orbit))};
}

OrbitFunction Geometry::zero(const Domain& d) { return {d, std::vector<Rational>(orbit_count(d))}; }

OrbitFunction Geometry::indicator(const Domain& d, std::size_t orbit) {
  OrbitFunction f = zero(d);
  f.values.at(orbit) = 1;
  return f;
}

const Geometry::Structure& Geometry::structure(const Composition& p, const Composition& m, const Composition& r) {
  const auto key = std::make_tuple(p, m, r);
  {
    std::lock_guard lock(mu_);
    if (auto it = structures_.find(key); it != structures_.end()) return *it->second;
  }
  const Domain pm{p, m}, mr{m, r}, pr{p, r};
  const auto& left = pair_orbits(pm);
  const auto& right = pair_orbits(mr);
  const auto& outer = pair_orbits(pr);
  const auto& middle = flags(m);
  const Flag& base = flags(p).front();
  std::vector<const Flag*> targets;
  for (auto j : outer.rep) targets.push_back(&flags(r)[j]);

  auto built = std::make_unique<Structure>();
  built->n1 = left.labels.size();
  built->n2 = right.labels.size();
  built->n3 = outer.labels.size();
  const std::size_t cells = built->n1 * built->n2 * built->n3;

  auto sweep = [&](std::size_t begin, std::size_t end, std::vector<std::int64_t>& counts) {
    counts.assign(cells, 0);
    for (std::size_t y = begin; y < end; ++y) {
      const std::size_t a = left.index.at(relative_position(space_, base, middle[y]));
      for (std::size_t o3 = 0; o3 < targets.size(); ++o3) {
        const std::size_t b = right.index.at(relative_position(space_, middle[y], *targets[o3]));
        ++counts[(a * built->n2 + b) * built->n3 + o3];
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(threads_, std::max<std::size_t>(1, middle.size() / 64));
  std::vector<std::vector<std::int64_t>> partial(workers);
  if (workers == 1) {
    sweep(0, middle.size(), partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (middle.size() + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t begin = std::min(middle.size(), t * chunk);
      const std::size_t end = std::min(middle.size(), begin + chunk);
      pool.emplace_back(sweep, begin, end, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  built->counts.assign(cells, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < cells; ++i) built->counts[i] += part[i];

  std::lock_guard lock(mu_);
  return *structures_.try_emplace(key, std::move(built)).first->second;
}

std::int64_t Geometry::structure_constant(const Composition& p, const Composition& m, const Composition& r, std::size_t o1,
                                          std::size_t o2, std::size_t o3) {
  const auto& s = structure(p, m, r);
  if (o1 >= s.n1 || o2 >= s.n2 || o3 >= s.n3) throw InvalidArgument("orbit index out of range");
  return s.counts[(o1 * s.n2 + o2) * s.n3 + o3];
}

OrbitFunction Geometry::convolve(const OrbitFunction& f, const OrbitFunction& g) {
  if (f.domain.right != g.domain.left)
    throw DomainMismatch("cannot convolve " + f.domain.to_string() + " with " + g.domain.to_string());
  const auto& s = structure(f.domain.left, f.domain.right, g.domain.right);
  if (f.values.size() != s.n1 || g.values.size() != s.n2) throw DomainMismatch("orbit function of the wrong size");
  OrbitFunction out{{f.domain.left, g.domain.right}, std::vector<Rational>(s.n3)};
  for (std::size_t a = 0; a < s.n1; ++a) {
    if (f.values[a] == 0) continue;
    for (std::size_t b = 0; b < s.n2; ++b) {
      if (g.values[b] == 0) continue;
      const Rational fg = f.values[a] * g.values[b];
      const std::int64_t* row = &s.counts[(a * s.n2 + b) * s.n3];
      for (std::size_t c = 0; c < s.n3; ++c)
        if (row[c] != 0) out.values[c] += fg * row[c];
    }
  }
  return out;
}

OrbitFunction Geometry::graph(const Composition& to, const Composition& from) {
  const Flag& y = flags(from).front();
  const Domain d{to, from};
  return indicator(d, orbit_of(d, forget(y, from, to), y));
}

AffinePerm Geometry::permutation(std::size_t orbit) {
  const Composition x = complete();
  return permutation_of(orbit_label({x, x}, orbit), rank());
}

std::size_t Geometry::orbit_of_permutation(const AffinePerm& w) {
  const Composition x = complete();
  const Domain d{x, x};
  for (std::size_t o = 0; o < orbit_count(d); ++o)
    if (permutation(o) == w) return o;
  throw InvalidArgument(w.to_string() + " is not a permutation of rank " + std::to_string(rank()));
}

// ---------------------------------------------------------------------------
// theta maps and lifting

Composition subset_type(int n, unsigned subset) {
  if (n < 1 || (subset >> (n - 1)) != 0) throw InvalidArgument("subset does not fit rank " + std::to_string(n));
  Composition parts;
  int last = 0;
  for (int k = 1; k <= n; ++k) {
    const bool kept = k == n || ((subset >> (k - 1)) & 1U) == 0;
    if (kept) {
      parts.push_back(k - last);
      last = k;
    }
  }
  return parts;
}

std::vector<unsigned> admissible_subsets(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("need n >= 1 and d >= 1");
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1U << (n - 1)); ++s)
    if (std::popcount(s) >= n - d) out.push_back(s);
  return out;
}

namespace {

void require_domain(const OrbitFunction& f, const Domain& d) {
  if (f.domain != d) throw DomainMismatch("expected a function on " + d.to_string() + ", got " + f.domain.to_string());
}

}  // namespace

OrbitFunction theta(Geometry& geo, const OrbitFunction& f, unsigned subset) {
  const Composition x = geo.complete();
  require_domain(f, {x, x});
  return geo.convolve(geo.graph(subset_type(geo.rank(), subset), x), f);
}

OrbitFunction theta_between(Geometry& geo, const OrbitFunction& g, unsigned from, unsigned to) {
  if ((from & ~to) != 0) throw InvalidArgument("theta_between needs I contained in J");
  const Composition x = geo.complete();
  const Composition fine = subset_type(geo.rank(), from);
  require_domain(g, {fine, x});
  return geo.convolve(geo.graph(subset_type(geo.rank(), to), fine), g);
}

Family theta_family(Geometry& geo, const OrbitFunction& f, int d) {
  Family out;
  for (unsigned s : admissible_subsets(geo.rank(), d)) out.emplace(s, theta(geo, f, s));
  return out;
}

namespace {

// Image orbit of O_w in Y_I x X and the multiplicity m_I(w).
std::pair<std::size_t, std::int64_t> project(Geometry& geo, unsigned subset, std::size_t w_orbit) {
  const Composition x = geo.complete();
  const OrbitFunction img = theta(geo, geo.indicator({x, x}, w_orbit), subset);
  for (std::size_t o = 0; o < img.values.size(); ++o) {
    if (img.values[o] == 0) continue;
    return {o, static_cast<std::int64_t>(img.values[o])};
  }
  throw InternalInvariant("theta of an orbit indicator vanished");
}

}  // namespace

std::int64_t fiber_multiplicity(Geometry& geo, unsigned subset, const AffinePerm& w) {
  return project(geo, subset, geo.orbit_of_permutation(w)).second;
}

OrbitFunction lift_family(Geometry& geo, int d, const Family& family) {
  const int n = geo.rank();
  const Composition x = geo.complete();
  const auto admissible = admissible_subsets(n, d);
  for (unsigned s : admissible) {
    auto it = family.find(s);
    if (it == family.end()) throw InvalidArgument("family is missing the component for subset " + std::to_string(s));
    require_domain(it->second, {subset_type(n, s), x});
    if (it->second.values.size() != geo.orbit_count(it->second.domain)) throw DomainMismatch("family member of the wrong size");
  }
  for (unsigned i : admissible)
    for (unsigned j : admissible) {
      if (i == j || (i & ~j) != 0) continue;
      if (theta_between(geo, family.at(i), i, j) != family.at(j))
        throw IncompatibleFamily("theta_{" + std::to_string(i) + "," + std::to_string(j) + "} does not carry f_I to f_J");
    }

  const std::size_t orbits = geo.orbit_count({x, x});
  std::vector<std::size_t> by_length(orbits);
  for (std::size_t o = 0; o < orbits; ++o) by_length[o] = o;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return geo.permutation(a).length() < geo.permutation(b).length(); });

  std::map<unsigned, std::vector<std::pair<std::size_t, std::int64_t>>> proj;
  for (unsigned s : admissible)
    for (std::size_t o = 0; o < orbits; ++o) proj[s].push_back(project(geo, s, o));

  OrbitFunction f = geo.zero({x, x});
  for (std::size_t o : by_length) {
    const AffinePerm w = geo.permutation(o);
    unsigned descents = 0;
    for (int i = 1; i < n; ++i)
      if (w.has_left_descent(i)) descents |= 1U << (i - 1);
    // w is of maximal length in W_I w exactly for I inside its left descent set.
    if (std::popcount(descents) < n - d) continue;
    const auto& p = proj.at(descents);
    const auto [target, m] = p[o];
    Rational rest = 0;
    for (std::size_t o2 = 0; o2 < orbits; ++o2)
      if (o2 != o && p[o2].first == target) rest += f.values[o2] * p[o2].second;
    f.values[o] = (family.at(descents).values[target] - rest) / m;
  }
  for (unsigned s : admissible)
    if (theta(geo, f, s) != family.at(s)) throw InternalInvariant("lifted function does not reproduce the family at subset " + std::to_string(s));
  return f;
}

// ---------------------------------------------------------------------------
// Reports

std::string Report::to_text() const {
  std::ostringstream os;
  os << claim << ": " << (ok ? "ok" : "FAILED") << "\n";
  for (const auto& [k, v] : dims) os << "  " << k << " = " << v << "\n";
  for (const auto& m : mismatches) os << "  mismatch: " << m << "\n";
  return os.str();
}

std::vector<StructureEntry> hecke_structure_table(Geometry& geo) {
  const Composition x = geo.complete();
  const std::size_t count = geo.orbit_count({x, x});
  std::vector<StructureEntry> out;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t c = 0; c < count; ++c) {
        const auto k = geo.structure_constant(x, x, x, a, b, c);
        if (k != 0) out.push_back({geo.permutation(a), geo.permutation(b), geo.permutation(c), k});
      }
  std::sort(out.begin(), out.end(), [](const StructureEntry& l, const StructureEntry& r) {
    return std::tie(l.row, l.col, l.result) < std::tie(r.row, r.col, r.result);
  });
  return out;
}

namespace {

// p(v) with v^-2 = q; p must involve even powers of v only.
Rational at_q(const LaurentPoly& p, int q) {
  if (!is_even_laurent(p)) throw InternalInvariant("Hecke coefficient " + p.to_string() + " is not a polynomial in v^-2");
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    const int k = -e / 2;  // v^e = q^k
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) {
      if (k >= 0)
        term *= q;
      else
        term /= q;
    }
    out += term;
  }
  return out;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RVector flatten(const IntMatrix& m) {
  RVector out;
  for (const auto& row : m)
    for (auto x : row) out.emplace_back(x);
  return out;
}

// dim {phi : phi M = M phi for every M in ms}.
std::size_t commutant_dim(const std::vector<IntMatrix>& ms, std::size_t n) {
  RowEchelon ech(n * n);
  for (const auto& m : ms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RVector row(n * n);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (m[k][j] != 0) {
            row[i * n + k] += m[k][j];
            nonzero = true;
          }
          if (m[i][k] != 0) {
            row[k * n + j] -= m[i][k];
            nonzero = true;
          }
        }
        if (nonzero) ech.add(std::move(row));
        if (ech.rank() == n * n) return 0;
      }
  return n * n - ech.rank();
}

std::size_t span_dim(const std::vector<IntMatrix>& ms, std::size_t n) {
  RowEchelon ech(n * n);
  for (const auto& m : ms) ech.add(flatten(m));
  return ech.rank();
}

inline constexpr std::size_t kMaxBimoduleDim = 40;

}  // namespace

Report verify_hecke_iso(int n, int q, unsigned threads) {
  Geometry geo(n, q, threads);
  const Composition x = geo.complete();
  const std::size_t count = geo.orbit_count({x, x});
  Report report{"hecke-iso n=" + std::to_string(n) + " q=" + std::to_string(q), true, {}, {}};
  report.dims.emplace_back("flags", static_cast<long long>(geo.flags(x).size()));
  report.dims.emplace_back("orbits", static_cast<long long>(count));
  long long checked = 0;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const AffinePerm u = geo.permutation(a);
      const AffinePerm w = geo.permutation(b);
      const HeckeElt prod = t_basis(u) * t_basis(w);
      for (std::size_t c = 0; c < count; ++c) {
        const AffinePerm z = geo.permutation(c);
        const Rational expected = at_q(prod.coeff(z), q);
        const Rational got = geo.structure_constant(x, x, x, a, b, c);
        ++checked;
        if (expected != got)
          report.fail("T" + u.to_string() + " * T" + w.to_string() + " at " + z.to_string() + ": convolution " + got.str() +
                      ", Hecke " + expected.str());
      }
    }
  report.dims.emplace_back("constants_checked", checked);
  return report;
}

Report bicommutant_check(int n, int d, int q, unsigned threads) {
  if (d < 1) throw InvalidArgument("d must be positive");
  Geometry geo(n, q, threads);
  const Composition x = geo.complete();
  const auto comps = compositions(n, d);

  std::vector<std::size_t> offset;
  std::size_t dim_c = 0;
  for (const auto& c : comps) {
    offset.push_back(dim_c);
    dim_c += geo.orbit_count({c, x});
  }
  if (dim_c > kMaxBimoduleDim)
    throw ResourceLimit("bimodule dimension " + std::to_string(dim_c) + " exceeds " + std::to_string(kMaxBimoduleDim));

  const std::size_t dim_b = geo.orbit_count({x, x});
  std::vector<IntMatrix> right(dim_b, IntMatrix(dim_c, std::vector<std::int64_t>(dim_c, 0)));
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const std::size_t k = geo.orbit_count({comps[ci], x});
      for (std::size_t o1 = 0; o1 < k; ++o1)
        for (std::size_t o3 = 0; o3 < k; ++o3)
          right[b][offset[ci] + o3][offset[ci] + o1] = geo.structure_constant(comps[ci], x, x, o1, b, o3);
    }

  std::vector<IntMatrix> left;
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (std::size_t cj = 0; cj < comps.size(); ++cj) {
      const std::size_t na = geo.orbit_count({comps[ci], comps[cj]});
      const std::size_t kin = geo.orbit_count({comps[cj], x});
      const std::size_t kout = geo.orbit_count({comps[ci], x});
      for (std::size_t a = 0; a < na; ++a) {
        IntMatrix m(dim_c, std::vector<std::int64_t>(dim_c, 0));
        for (std::size_t o2 = 0; o2 < kin; ++o2)
          for (std::size_t o3 = 0; o3 < kout; ++o3)
            m[offset[ci] + o3][offset[cj] + o2] = geo.structure_constant(comps[ci], comps[cj], x, a, o2, o3);
        left.push_back(std::move(m));
      }
    }
  const std::size_t dim_a = left.size();

  Report report{"bicommutant n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q), true, {}, {}};
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b)
      if (product(left[a], right[b]) != product(right[b], left[a])) {
        report.fail("left and right actions do not commute");
        a = dim_a;
        break;
      }

  const std::size_t end_b = commutant_dim(right, dim_c);
  const std::size_t end_a = commutant_dim(left, dim_c);
  const std::size_t rank_a = span_dim(left, dim_c);
  const std::size_t rank_b = span_dim(right, dim_c);
  report.dims = {{"components", static_cast<long long>(comps.size())},
                 {"dim_A", static_cast<long long>(dim_a)},
                 {"dim_B", static_cast<long long>(dim_b)},
                 {"dim_C", static_cast<long long>(dim_c)},
                 {"dim_End_B_C", static_cast<long long>(end_b)},
                 {"dim_End_A_C", static_cast<long long>(end_a)},
                 {"rank_A_to_End_B_C", static_cast<long long>(rank_a)},
                 {"rank_B_to_End_A_C", static_cast<long long>(rank_b)},
                 {"kernel_A", static_cast<long long>(dim_a - rank_a)},
                 {"kernel_B", static_cast<long long>(dim_b - rank_b)}};
  if (rank_b != end_a) report.fail("B -> End_A(C) is not onto: rank " + std::to_string(rank_b) + " < " + std::to_string(end_a));
  if (d >= n) {
    if (rank_b != dim_b) report.fail("B -> End_A(C) is not injective");
    if (rank_a != dim_a) report.fail("A -> End_B(C) is not injective");
    if (rank_a != end_b) report.fail("A -> End_B(C) is not onto: rank " + std::to_string(rank_a) + " < " + std::to_string(end_b));
  }
  return report;
}

Report psi_image_check(int n, int d, int q, unsigned threads) {
  if (d < 1) throw InvalidArgument("d must be positive");
  Geometry geo(n, q, threads);
  const Composition x = geo.complete();
  const Domain xx{x, x};
  const auto comps = compositions(n, d);
  Report report{"psi-image n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q), true, {}, {}};
  long long pairs = 0;
  for (const auto& ci : comps) {
    // 1_{Z_i} and m_i for the component Y_i.
    OrbitFunction z = geo.zero(xx);
    for (std::size_t o = 0; o < z.values.size(); ++o) {
      const auto [a, b] = geo.orbit_representative(xx, o);
      if (forget(a, x, ci) == forget(b, x, ci)) z.values[o] = 1;
    }
    const Flag base = forget(geo.flags(x).front(), x, ci);
    std::int64_t m = 0;
    for (const auto& f : geo.flags(x))
      if (forget(f, x, ci) == base) ++m;
    const OrbitFunction diag = geo.graph(ci, x);

    for (const auto& cj : comps) {
      ++pairs;
      const Domain target{cj, x};
      const std::size_t dim_h = geo.orbit_count(target);
      // Kernel of h -> h * 1_Z - m h.
      std::vector<RVector> columns;
      for (std::size_t o = 0; o < dim_h; ++o) {
        OrbitFunction h = geo.convolve(geo.indicator(target, o), z);
        h.values[o] -= m;
        columns.push_back(h.values);
      }
      std::vector<RVector> rows(dim_h, RVector(dim_h));
      for (std::size_t r = 0; r < dim_h; ++r)
        for (std::size_t c = 0; c < dim_h; ++c) rows[r][c] = columns[c][r];
      const std::size_t fixed_dim = nullspace(rows, dim_h).size();

      const Domain source{cj, ci};
      RowEchelon image(dim_h);
      bool inside = true;
      for (std::size_t o = 0; o < geo.orbit_count(source); ++o) {
        const OrbitFunction h = geo.convolve(geo.indicator(source, o), diag);
        image.add(h.values);
        OrbitFunction hz = geo.convolve(h, z);
        for (std::size_t k = 0; k < dim_h; ++k)
          if (hz.values[k] != m * h.values[k]) inside = false;
      }
      const std::string where = "(" + parts_to_string(cj) + "|" + parts_to_string(ci) + ")";
      if (!inside) report.fail(where + ": psi image not fixed by 1_Z");
      if (image.rank() != geo.orbit_count(source)) report.fail(where + ": psi is not injective");
      if (image.rank() != fixed_dim)
        report.fail(where + ": image has dimension " + std::to_string(image.rank()) + ", fixed space " + std::to_string(fixed_dim));
    }
  }
  report.dims.emplace_back("component_pairs", pairs);
  return report;
}

Report lift_trials(int n, int d, int q, int trials, std::uint64_t seed, unsigned threads) {
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  Geometry geo(n, q, threads);
  const Composition x = geo.complete();
  const Domain xx{x, x};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-3, 3);
  Report report{"lift n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q), true, {}, {}};
  long long differs = 0;
  for (int t = 0; t < trials; ++t) {
    OrbitFunction g = geo.zero(xx);
    for (auto& v : g.values) v = value(rng);
    const Family family = theta_family(geo, g, d);
    const OrbitFunction f = lift_family(geo, d, family);
    for (const auto& [s, fs] : family)
      if (theta(geo, f, s) != fs) report.fail("trial " + std::to_string(t) + ": theta_" + std::to_string(s) + " of the lift differs");
    if (f != g) ++differs;
  }
  report.dims = {{"trials", trials},
                 {"admissible_subsets", static_cast<long long>(admissible_subsets(n, d).size())},
                 {"lift_differs_from_source", differs}};
  return report;
}

}  // namespace affhecke::oracle
