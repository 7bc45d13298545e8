#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke::testing {

/// bar(T_w) as the product of bar(T_s) = v^2 T_s + (v^2 - 1) and bar(T_rho) = T_rho
/// along a reduced word.
inline HeckeElt oracle_bar(const HeckeElt& a) {
  const int n = a.rank();
  const HeckeElt one(n, 1);
  HeckeElt out(n);
  for (const auto& [w, c] : a.terms()) {
    HeckeElt term(n, c.bar());
    for (const auto& l : reduced_word(w).letters) {
      if (l.is_simple())
        term = term * (vpow(2) * t_simple(n, l.index) + (vpow(2) - 1) * one);
      else
        term = term * t_basis(AffinePerm::rho(n, l.kind == Letter::Kind::Rho ? 1 : -1));
    }
    out += term;
  }
  return out;
}

/// Relations of both presentations for the constructed generators; returns
/// the failing ones.
inline std::vector<std::string> presentation_failures(int n) {
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back("n=" + std::to_string(n) + ": " + what);
  };
  const HeckeElt one(n, 1), zero(n);
  const LaurentPoly q = vpow(-2);
  const auto rho = t_basis(AffinePerm::rho(n)), rho_inv = t_basis(AffinePerm::rho(n, -1));
  for (int i = 0; i < n; ++i) {
    const auto ti = t_simple(n, i);
    const auto si = std::to_string(i);
    check((ti + one) * (ti - q * one) == zero, "quadratic T" + si);
    check(rho * ti * rho_inv == t_simple(n, (i + 1) % n), "rho T" + si + " rho^-1");
    for (int j = 0; j < n; ++j) {
      const auto tj = t_simple(n, j);
      const int gap = std::min((i - j + n) % n, (j - i + n) % n);
      if (n > 2 && gap == 1)
        check(ti * tj * ti == tj * ti * tj, "braid T" + si + " T" + std::to_string(j));
      else if (gap > 1)
        check(ti * tj == tj * ti, "commute T" + si + " T" + std::to_string(j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    const auto xi = x_element(n, i);
    const auto xs = "X" + std::to_string(i);
    check(xi * x_element_inverse(n, i) == one && x_element_inverse(n, i) * xi == one, xs + " inverse");
    for (int j = 1; j <= n; ++j)
      check(xi * x_element(n, j) == x_element(n, j) * xi, xs + " X" + std::to_string(j) + " commute");
    for (int j = 1; j < n; ++j)
      if (i != j && i != j + 1) check(xi * t_simple(n, j) == t_simple(n, j) * xi, xs + " T" + std::to_string(j) + " commute");
    if (i < n) check(t_simple(n, i) * xi * t_simple(n, i) == q * x_element(n, i + 1), "T" + std::to_string(i) + " " + xs + " T");
  }
  HeckeElt chain = one;
  for (int i = 1; i < n; ++i) chain = chain * t_simple(n, i);
  check(rho == vpow(1 - n) * chain * x_element_inverse(n, n), "T_rho via X_n");
  return bad;
}

}  // namespace affhecke::testing
