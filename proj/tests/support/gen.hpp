#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/laurent.hpp"
#include "affhecke/weyl.hpp"

namespace affhecke::testing {

/// Seeded generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  LaurentPoly laurent(int max_terms = 4, int exp_range = 4, int coeff_range = 5) {
    std::vector<LaurentPoly::Term> terms;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) terms.emplace_back(uniform(-exp_range, exp_range), uniform(-coeff_range, coeff_range));
    return LaurentPoly::from_terms(std::move(terms));
  }

  /// Product of random letters over {s_0, ..., s_{n-1}, rho, rho^-1}.
  AffinePerm perm(int n, int max_letters = 6) {
    AffinePerm w(n);
    const int k = uniform(0, max_letters);
    for (int i = 0; i < k; ++i) {
      const int pick = uniform(n < 2 ? n : 0, n + 1);
      if (pick < n)
        w = w * AffinePerm::simple(n, pick);
      else
        w = w * AffinePerm::rho(n, pick == n ? 1 : -1);
    }
    return w;
  }

  /// Product of random letters over {s_1, ..., s_{n-1}, rho^-1}.
  AffinePerm positive_perm(int n, int max_letters = 6) {
    AffinePerm w(n);
    const int k = uniform(0, max_letters);
    for (int i = 0; i < k; ++i) {
      const int pick = uniform(1, n);
      w = w * (pick < n ? AffinePerm::simple(n, pick) : AffinePerm::rho(n, -1));
    }
    return w;
  }

  HeckeElt hecke(int n, int max_terms = 3, int max_letters = 4, bool positive = false) {
    HeckeElt h(n);
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
      const AffinePerm w = positive ? positive_perm(n, max_letters) : perm(n, max_letters);
      h.add_term(w, laurent(2, 2, 3));
    }
    return h;
  }

 private:
  std::mt19937_64 rng_;
};

/// Independent model of a window: w(x) for any x, from the periodicity rule.
inline int eval_window(const std::vector<int>& window, int x) {
  const int n = static_cast<int>(window.size());
  const int r = ((x - 1) % n + n) % n;
  const int shift = (x - 1 - r) / n;
  return window[r] + shift * n;
}

/// Inversions (i, j), 1 <= i <= n, i < j, w(i) > w(j), counted by brute force.
inline int brute_length(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  int lo = window[0], hi = window[0];
  for (int a : window) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  const int reach = (hi - lo) + 2 * n + 1;
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= i + reach; ++j)
      if (eval_window(window, i) > eval_window(window, j)) ++count;
  return count;
}

/// Every element obtained as a subword of the given word.
inline std::set<AffinePerm> subword_elements(const Word& word) {
  std::set<AffinePerm> out;
  const std::size_t k = word.letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Word sub{word.n, {}};
    for (std::size_t i = 0; i < k; ++i)
      if (!word.letters[i].is_simple() || ((mask >> i) & 1U)) sub.letters.push_back(word.letters[i]);
    out.insert(sub.evaluate());
  }
  return out;
}

}  // namespace affhecke::testing
