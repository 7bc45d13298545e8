#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "affhecke/errors.hpp"
#include "affhecke/quotients.hpp"
#include "support/gen.hpp"

namespace affhecke {
namespace {

using testing::Gen;

const LaurentPoly q = vpow(-2);

AffinePerm w2(int a, int b) { return AffinePerm(std::vector<int>{a, b}); }
HeckeElt one(int n) { return HeckeElt(n, 1); }
HeckeElt T(const AffinePerm& w) { return t_basis(w); }
const IdealSpec kLine(2, {{1, 0}});

// Ideal membership decoded straight from the window: the residue r of w(i)
// carries the translation coordinate (w(i) - r) / n.
bool oracle_in_ideal(const AffinePerm& w, const std::vector<Composition>& family) {
  const int n = w.rank();
  Composition mu(n);
  for (int a : w.window()) {
    const int r = ((a - 1) % n + n) % n + 1;
    mu[r - 1] = -(a - r) / n;
  }
  std::sort(mu.begin(), mu.end(), std::greater<>());
  for (const auto& lambda : family) {
    bool geq = true;
    for (int i = 0; i < n; ++i) geq = geq && mu[i] >= lambda[i];
    if (geq) return true;
  }
  return false;
}

TEST(Quotients, InPositiveExamples) {
  EXPECT_TRUE(in_positive(t_simple(2, 1)));
  EXPECT_FALSE(in_positive(T(AffinePerm::rho(2))));
  EXPECT_TRUE(in_positive(x_element(2, 1) * x_element(2, 2)));
}

TEST(Quotients, InIdealExamples) {
  EXPECT_TRUE(in_ideal(AffinePerm::translation(std::vector<int>{-1, 0}), kLine));
  EXPECT_EQ(AffinePerm::translation(std::vector<int>{-1, 0}), w2(-1, 2));
  EXPECT_FALSE(in_ideal(AffinePerm::simple(2, 1), kLine));
  EXPECT_TRUE(in_ideal(AffinePerm::translation(std::vector<int>{0, -1}), kLine));
  EXPECT_THROW(in_ideal(AffinePerm::rho(2), kLine), NotPositive);
  EXPECT_THROW(in_ideal(AffinePerm(3), kLine), DomainMismatch);
}

TEST(Quotients, InIdealMatchesOracle) {
  const std::vector<std::pair<int, std::vector<Composition>>> specs = {
      {2, {{1, 0}}}, {2, {{1, 1}}}, {2, {{2, 0}, {1, 1}}}, {3, {{1, 0, 0}}}, {3, {{2, 1, 0}}}, {3, {{2, 1, 0}, {1, 1, 1}}}};
  for (const auto& [n, family] : specs) {
    const IdealSpec spec(n, family);
    for (const auto& w : positive_elements(n, 4, 4)) EXPECT_EQ(in_ideal(w, spec), oracle_in_ideal(w, family)) << w;
  }
}

TEST(Quotients, IdealSpecValidation) {
  EXPECT_THROW(IdealSpec(2, {}), InvalidArgument);
  EXPECT_THROW(IdealSpec(2, {{0, 1}}), InvalidArgument);
  EXPECT_THROW(IdealSpec(2, {{1, 0, 0}}), InvalidArgument);
  const IdealSpec spec(3, {{2, 1, 0}, {2, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(spec.partitions(), (std::vector<Composition>{{1, 1, 1}, {2, 1, 0}}));
  EXPECT_EQ(spec.to_string(), "1,1,1;2,1,0");
}

TEST(Quotients, ReduceExamples) {
  EXPECT_EQ(reduce(t_simple(2, 1), kLine).rep(), t_simple(2, 1));
  EXPECT_TRUE(reduce(x_element(2, 1), kLine).is_zero());
  EXPECT_TRUE(reduce(x_element(2, 2), kLine).is_zero());
  EXPECT_TRUE(reduce(HeckeElt(2), kLine).is_zero());
  EXPECT_THROW(reduce(T(AffinePerm::rho(2)), kLine), NotPositive);
}

TEST(Quotients, QuotientMulExamples) {
  const auto e = reduce(one(2), kLine);
  const auto s = reduce(t_simple(2, 1), kLine);
  EXPECT_EQ(quotient_mul(e, s), s);
  EXPECT_EQ(quotient_mul(s, s).rep(), (q - 1) * t_simple(2, 1) + q * one(2));
  const auto x = reduce(x_element(2, 2), kLine);
  EXPECT_TRUE(quotient_mul(x, s).is_zero());
  EXPECT_THROW(quotient_mul(s, reduce(t_simple(2, 1), IdealSpec(2, {{1, 1}}))), DomainMismatch);
}

TEST(Quotients, IdealGeneratorExamples) {
  EXPECT_EQ(ideal_generator(std::vector<int>{0, 0}), one(2));
  EXPECT_EQ(ideal_generator(std::vector<int>{1, 0}), HeckeElt::basis(w2(1, 0), vpow(-1)));
  const auto g = ideal_generator(std::vector<int>{1, 1});
  ASSERT_TRUE(g.is_single_term());
  EXPECT_EQ(g.terms().begin()->first, AffinePerm::translation(std::vector<int>{-1, -1}));
  EXPECT_THROW(ideal_generator(std::vector<int>{0, 1}), InvalidArgument);
}

TEST(Quotients, GeneratorSupportIsInIdeal) {
  for (int n : {2, 3})
    for (int size = 0; size <= 4; ++size)
      for (const auto& lambda : compositions(size, n)) {
        if (!is_partition(lambda)) continue;
        const IdealSpec spec(n, {lambda});
        const auto g = ideal_generator(lambda);
        EXPECT_TRUE(ideal_supported(g, spec));
        const auto& w = g.terms().begin()->first;
        EXPECT_EQ(w, AffinePerm::translation(Composition(lambda.rbegin(), lambda.rend())).inverse());
      }
}

TEST(Quotients, GeneratedSpanExamples) {
  for (const auto& lambda : std::vector<Composition>{{1, 0}, {2, 0}, {1, 1}, {0, 0}}) {
    const auto report = generated_span_report(lambda, 3);
    EXPECT_TRUE(report.inside) << parts_to_string(lambda);
    EXPECT_EQ(report.rank, report.target) << parts_to_string(lambda);
    EXPECT_GT(report.target, 0U);
  }
  EXPECT_TRUE(generated_span_check(std::vector<int>{2, 1, 0}, 3));
  EXPECT_THROW(generated_span_check(std::vector<int>{0, 1}, 3), InvalidArgument);
}

TEST(Quotients, MinimalPartitionsExamples) {
  EXPECT_EQ(minimal_partitions({{2, 1}, {1, 1}, {3, 0}}).partitions(), (std::vector<Composition>{{1, 1}, {3, 0}}));
  EXPECT_EQ(minimal_partitions({{2, 1}}).partitions(), (std::vector<Composition>{{2, 1}}));
  EXPECT_EQ(minimal_partitions({{1, 0}, {0, 0}}).partitions(), (std::vector<Composition>{{0, 0}}));
  EXPECT_THROW(minimal_partitions({{0, 1}}), InvalidArgument);
  EXPECT_THROW(minimal_partitions({}), InvalidArgument);
}

// H_n T_(Id,nu) H_n is spanned by the T_(sigma, nu^tau).
TEST(Quotients, TranslationDoubleCosets) {
  const int n = 3;
  const auto perms = finite_perms(n);
  int checked = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= a; ++b)
      for (int c = -2; c <= b; ++c) {
        const Composition nu{a, b, c};
        const auto t = AffinePerm::translation(nu);
        std::set<AffinePerm> brute, pairs;
        for (const auto& x : perms)
          for (const auto& y : perms) brute.insert(x * t * y);
        Composition tau = nu;
        std::sort(tau.begin(), tau.end());
        do {
          for (const auto& sigma : perms) pairs.insert(AffinePerm::from_pair(sigma.window(), tau));
        } while (std::next_permutation(tau.begin(), tau.end()));
        EXPECT_EQ(brute, pairs) << parts_to_string(nu);
        const auto coset = double_coset(t);
        EXPECT_EQ(std::set<AffinePerm>(coset.begin(), coset.end()), brute);
        EXPECT_TRUE(translation_double_coset_check(nu)) << parts_to_string(nu);
        ++checked;
      }
  EXPECT_EQ(checked, 35);
  EXPECT_THROW(translation_double_coset_check(std::vector<int>{0, 1, 0}), InvalidArgument);
}

class QuotientsProperty : public ::testing::Test {
 protected:
  Gen gen{1618};

  HeckeElt random_ideal_element(const IdealSpec& spec, const std::vector<AffinePerm>& pool) {
    HeckeElt f(spec.rank());
    const int k = gen.uniform(1, 3);
    for (int i = 0; i < k; ++i) f.add_term(pool[gen.uniform(0, static_cast<int>(pool.size()) - 1)], gen.laurent(2, 2, 3));
    return f;
  }
};

TEST_F(QuotientsProperty, RandomDoubleCosets) {
  for (int t = 0; t < 30; ++t) {
    const int n = gen.uniform(2, 3);
    const auto w = gen.perm(n, 5);
    const auto report = double_coset_span_report(w);
    EXPECT_TRUE(report.ok()) << w << " rank " << report.rank << "/" << report.target;
  }
}

TEST_F(QuotientsProperty, TwoSidedAbsorption) {
  for (const auto& [n, family] : std::vector<std::pair<int, std::vector<Composition>>>{
           {2, {{1, 0}}}, {2, {{1, 1}}}, {3, {{1, 0, 0}}}, {3, {{2, 1, 0}, {1, 1, 1}}}}) {
    const IdealSpec spec(n, family);
    std::vector<AffinePerm> pool;
    for (const auto& w : positive_elements(n, 5, 4))
      if (in_ideal(w, spec)) pool.push_back(w);
    ASSERT_FALSE(pool.empty());
    // Exhaustive over the generators.
    std::vector<HeckeElt> generators{T(AffinePerm::rho(n, -1))};
    for (int i = 1; i < n; ++i) generators.push_back(t_simple(n, i));
    for (const auto& w : pool)
      for (const auto& g : generators) {
        EXPECT_TRUE(ideal_supported(g * T(w), spec)) << w;
        EXPECT_TRUE(ideal_supported(T(w) * g, spec)) << w;
      }
    for (int t = 0; t < 40; ++t) {
      const auto a = gen.hecke(n, 3, 4, true);
      const auto f = random_ideal_element(spec, pool);
      EXPECT_TRUE(ideal_supported(a * f, spec));
      EXPECT_TRUE(ideal_supported(f * a, spec));
    }
  }
}

TEST_F(QuotientsProperty, QuotientMapIsAlgebraMap) {
  for (const auto& spec : {kLine, IdealSpec(2, {{2, 0}, {1, 1}}), IdealSpec(3, {{1, 1, 0}})}) {
    const int n = spec.rank();
    EXPECT_EQ(reduce(one(n), spec).rep(), one(n));
    for (int t = 0; t < 60; ++t) {
      const auto a = gen.hecke(n, 3, 5, true), b = gen.hecke(n, 3, 5, true);
      const auto za = reduce(a, spec), zb = reduce(b, spec);
      EXPECT_EQ(reduce(a * b, spec), quotient_mul(za, zb));
      EXPECT_EQ(reduce(a + b, spec).rep(), za.rep() + zb.rep());
      EXPECT_TRUE(ideal_supported(a - za.rep(), spec));
      for (const auto& [w, c] : za.rep().terms()) EXPECT_FALSE(in_ideal(w, spec));
    }
  }
}

TEST_F(QuotientsProperty, MinimalPartitionsAntichain) {
  for (int t = 0; t < 200; ++t) {
    const int n = gen.uniform(1, 4);
    std::vector<Composition> family;
    const int k = gen.uniform(1, 6);
    for (int i = 0; i < k; ++i) {
      Composition p(n);
      for (auto& x : p) x = gen.uniform(0, 4);
      std::sort(p.begin(), p.end(), std::greater<>());
      family.push_back(p);
    }
    std::set<Composition> want;
    for (const auto& p : family) {
      bool minimal = true;
      for (const auto& other : family)
        if (other != p && componentwise_geq(p, other)) minimal = false;
      if (minimal) want.insert(p);
    }
    const auto got = minimal_partitions(family);
    EXPECT_EQ(std::set<Composition>(got.partitions().begin(), got.partitions().end()), want);
    EXPECT_EQ(minimal_partitions(got.partitions()), got);
  }
}

}  // namespace
}  // namespace affhecke
