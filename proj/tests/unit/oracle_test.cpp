#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "affhecke/errors.hpp"
#include "affhecke/oracle/convolution.hpp"
#include "affhecke/oracle/flags.hpp"
#include "support/gen.hpp"

namespace affhecke::oracle {
namespace {

using affhecke::testing::Gen;

// q-multinomial [n; parts]_q, the number of flags of the given type over F_q.
long long q_multinomial(int q, const Composition& parts) {
  auto q_factorial = [q](int m) {
    long long f = 1, qint = 0, pw = 1;
    for (int k = 1; k <= m; ++k) {
      qint += pw;
      pw *= q;
      f *= qint;
    }
    return f;
  };
  long long out = q_factorial(std::accumulate(parts.begin(), parts.end(), 0));
  for (int p : parts) out /= q_factorial(p);
  return out;
}

std::set<AffinePerm> parabolic(int n, unsigned subset) {
  std::set<AffinePerm> group{AffinePerm(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& u : std::vector<AffinePerm>(group.begin(), group.end()))
      for (int i = 1; i < n; ++i)
        if ((subset >> (i - 1)) & 1U) grew = group.insert(AffinePerm::simple(n, i) * u).second || grew;
  }
  return group;
}

OrbitFunction random_function(Gen& gen, Geometry& geo, const Domain& d) {
  OrbitFunction f = geo.zero(d);
  for (auto& x : f.values) x = gen.uniform(-3, 3);
  return f;
}

TEST(OracleFlags, Counts) {
  EXPECT_EQ(enumerate_flags(2, 2, complete_type(2)).size(), 3U);
  EXPECT_EQ(enumerate_flags(3, 2, complete_type(3)).size(), 21U);
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d)
        for (const auto& parts : compositions(n, d))
          EXPECT_EQ(static_cast<long long>(enumerate_flags(n, q, parts).size()), q_multinomial(q, parts))
              << "q=" << q << " type " << parts_to_string(parts);
}

TEST(OracleFlags, Guards) {
  EXPECT_THROW(enumerate_flags(5, 2, complete_type(5)), ResourceLimit);
  EXPECT_THROW(enumerate_flags(2, 5, complete_type(2)), ResourceLimit);
  EXPECT_THROW(enumerate_flags(2, 2, Composition{1, 2}), InvalidArgument);
  EXPECT_THROW(enumerate_flags(2, 2, Composition{}), InvalidArgument);
}

TEST(OracleFlags, OmegaComponentIsCompleteFlags) {
  for (int n : {2, 3})
    for (int d = n; d <= n + 1; ++d) {
      const VectorSpace space(n, 2);
      const auto complete = enumerate_flags(space, complete_type(n));
      const auto om = omega(n, d);
      const auto omega_flags = enumerate_flags(space, om);
      std::set<Flag> image;
      for (const auto& f : complete) image.insert(forget(f, complete_type(n), om));
      EXPECT_EQ(image, std::set<Flag>(omega_flags.begin(), omega_flags.end()));
      EXPECT_EQ(image.size(), complete.size());
    }
}

TEST(OracleFlags, LabelsAreOrbits) {
  EXPECT_TRUE(labels_match_group_orbits(2, 2, complete_type(2), complete_type(2)));
  EXPECT_TRUE(labels_match_group_orbits(3, 2, complete_type(3), complete_type(3)));
  EXPECT_TRUE(labels_match_group_orbits(3, 2, Composition{2, 1}, complete_type(3)));
  EXPECT_TRUE(labels_match_group_orbits(3, 2, Composition{1, 0, 2}, Composition{2, 1}));
}

TEST(OracleFlags, PermutationLabels) {
  Geometry geo(3, 2);
  const Domain xx{geo.complete(), geo.complete()};
  EXPECT_EQ(geo.orbit_count(xx), 6U);
  std::set<AffinePerm> seen;
  for (std::size_t o = 0; o < 6; ++o) {
    const auto w = geo.permutation(o);
    EXPECT_TRUE(w.is_finite_perm());
    EXPECT_EQ(geo.orbit_of_permutation(w), o);
    seen.insert(w);
  }
  EXPECT_EQ(seen.size(), 6U);
  // The diagonal is the identity orbit.
  const auto& base = geo.flags(geo.complete()).front();
  EXPECT_EQ(geo.permutation(geo.orbit_of(xx, base, base)), AffinePerm(3));
}

TEST(OracleConvolution, SimpleOrbitSquares) {
  Geometry geo(2, 2);
  const Domain xx{geo.complete(), geo.complete()};
  const auto e = geo.orbit_of_permutation(AffinePerm(2));
  const auto s = geo.orbit_of_permutation(AffinePerm::simple(2, 1));
  const auto sq = geo.convolve(geo.indicator(xx, s), geo.indicator(xx, s));
  EXPECT_EQ(sq.values[e], 2);
  EXPECT_EQ(sq.values[s], 1);
}

TEST(OracleConvolution, DiagonalIsUnitAndProductIsAssociative) {
  Gen gen(4242);
  Geometry geo(3, 2);
  const Composition x = geo.complete(), y{2, 1}, z{1, 0, 2};
  const auto unit_x = geo.graph(x, x), unit_y = geo.graph(y, y);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_function(gen, geo, {y, x});
    EXPECT_EQ(geo.convolve(unit_y, f), f);
    EXPECT_EQ(geo.convolve(f, unit_x), f);
    const auto g = random_function(gen, geo, {x, z});
    const auto h = random_function(gen, geo, {z, y});
    EXPECT_EQ(geo.convolve(geo.convolve(f, g), h), geo.convolve(f, geo.convolve(g, h)));
  }
  EXPECT_THROW(geo.convolve(unit_x, unit_y), DomainMismatch);
}

TEST(OracleConvolution, ThreadCountDoesNotChangeTables) {
  Geometry serial(3, 2, 1), parallel(3, 2, 4);
  const auto a = hecke_structure_table(serial), b = hecke_structure_table(parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].row, b[i].row);
    EXPECT_EQ(a[i].col, b[i].col);
    EXPECT_EQ(a[i].result, b[i].result);
    EXPECT_EQ(a[i].coefficient, b[i].coefficient);
  }
}

TEST(OracleHecke, StructureConstantsMatch) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto report = verify_hecke_iso(n, q);
    EXPECT_TRUE(report.ok) << report.to_text();
  }
}

TEST(OracleBicommutant, Bijective) {
  for (auto [n, d, q] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 3, 2}, {2, 2, 3}}) {
    const auto report = bicommutant_check(n, d, q);
    EXPECT_TRUE(report.ok) << report.to_text();
  }
}

TEST(OracleBicommutant, SurjectiveBelowRank) {
  const auto report = bicommutant_check(3, 2, 2);
  EXPECT_TRUE(report.ok) << report.to_text();
  std::map<std::string, long long> dims(report.dims.begin(), report.dims.end());
  EXPECT_EQ(dims.at("rank_B_to_End_A_C"), dims.at("dim_End_A_C"));
  EXPECT_GT(dims.at("kernel_B"), 0);
  EXPECT_EQ(dims.at("dim_B"), 6);
}

TEST(OracleTheta, EmptySubsetIsIdentity) {
  Gen gen(5);
  Geometry geo(3, 2);
  const Domain xx{geo.complete(), geo.complete()};
  EXPECT_EQ(subset_type(3, 0), geo.complete());
  EXPECT_EQ(subset_type(3, 0b11), Composition{3});
  EXPECT_EQ(subset_type(3, 0b01), (Composition{2, 1}));
  for (int t = 0; t < 5; ++t) {
    const auto f = random_function(gen, geo, xx);
    EXPECT_EQ(theta(geo, f, 0), f);
  }
}

TEST(OracleTheta, Transitivity) {
  Gen gen(6);
  for (int n : {2, 3}) {
    Geometry geo(n, 2);
    const Domain xx{geo.complete(), geo.complete()};
    const unsigned full = (1U << (n - 1)) - 1;
    for (int t = 0; t < 5; ++t) {
      const auto f = random_function(gen, geo, xx);
      for (unsigned i = 0; i <= full; ++i)
        for (unsigned j = 0; j <= full; ++j) {
          if ((i & ~j) != 0) {
            EXPECT_THROW(theta_between(geo, theta(geo, f, i), i, j), InvalidArgument);
            continue;
          }
          EXPECT_EQ(theta_between(geo, theta(geo, f, i), i, j), theta(geo, f, j));
        }
    }
  }
}

TEST(OracleTheta, DiagonalGivesGraphAndFiberSizes) {
  Geometry geo(3, 2);
  const Composition x = geo.complete();
  for (unsigned s = 0; s < 4; ++s) {
    const Composition type = subset_type(3, s);
    EXPECT_EQ(theta(geo, geo.graph(x, x), s), geo.graph(type, x));
    const auto& base = geo.flags(type).front();
    long long fiber = 0;
    for (const auto& f : geo.flags(x))
      if (forget(f, x, type) == base) ++fiber;
    EXPECT_EQ(fiber, q_multinomial(2, x) / q_multinomial(2, type));
  }
}

TEST(OracleTheta, MultiplicitiesSumToFiber) {
  for (int n : {2, 3}) {
    Geometry geo(n, 2);
    const Composition x = geo.complete();
    const auto perms = finite_perms(n);
    for (unsigned s = 0; s < (1U << (n - 1)); ++s) {
      const auto group = parabolic(n, s);
      const long long fiber = q_multinomial(2, x) / q_multinomial(2, subset_type(n, s));
      for (const auto& w : perms) {
        long long total = 0;
        for (const auto& u : group) total += fiber_multiplicity(geo, s, u * w);
        EXPECT_EQ(total, fiber) << "subset " << s << " " << w;
      }
    }
  }
}

TEST(OracleLift, ZeroFamily) {
  Geometry geo(3, 2);
  const Domain xx{geo.complete(), geo.complete()};
  const auto family = theta_family(geo, geo.zero(xx), 2);
  EXPECT_TRUE(lift_family(geo, 2, family).is_zero());
}

TEST(OracleLift, RoundTrip) {
  Gen gen(42);
  Geometry geo(3, 2);
  const Domain xx{geo.complete(), geo.complete()};
  for (int t = 0; t < 20; ++t) {
    const auto g = random_function(gen, geo, xx);
    const auto family = theta_family(geo, g, 2);
    const auto f = lift_family(geo, 2, family);
    for (const auto& [s, fs] : family) EXPECT_EQ(theta(geo, f, s), fs);
  }
}

TEST(OracleLift, FullRankReproducesSource) {
  Gen gen(43);
  for (int d : {3, 4}) {
    Geometry geo(3, 2);
    const Domain xx{geo.complete(), geo.complete()};
    const auto g = random_function(gen, geo, xx);
    EXPECT_EQ(lift_family(geo, d, theta_family(geo, g, d)), g);
  }
}

TEST(OracleLift, RejectsBadFamilies) {
  Gen gen(44);
  Geometry geo(3, 2);
  const Domain xx{geo.complete(), geo.complete()};
  auto family = theta_family(geo, random_function(gen, geo, xx), 2);
  auto broken = family;
  broken.at(0b01).values[0] += 1;
  EXPECT_THROW(lift_family(geo, 2, broken), IncompatibleFamily);
  family.erase(0b11);
  EXPECT_THROW(lift_family(geo, 2, family), InvalidArgument);
}

TEST(OracleLift, SeededTrials) {
  const auto report = lift_trials(3, 2, 2, 10, 7);
  EXPECT_TRUE(report.ok) << report.to_text();
}

TEST(OraclePsi, ImageCharacterization) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto report = psi_image_check(n, d, 2);
    EXPECT_TRUE(report.ok) << report.to_text();
  }
}

}  // namespace
}  // namespace affhecke::oracle
