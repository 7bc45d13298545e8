#include "affhecke/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <vector>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

// q = v^-2
const LaurentPoly& q_poly() {
  static const LaurentPoly q = vpow(-2);
  return q;
}

const LaurentPoly& q_minus_one() {
  static const LaurentPoly p{{-2, 1}, {0, -1}};
  return p;
}

}  // namespace

HeckeElt::HeckeElt(int n, LaurentPoly scalar) : n_(n) {
  if (!scalar.is_zero()) terms_.emplace(AffinePerm(n), std::move(scalar));
}

HeckeElt HeckeElt::basis(const AffinePerm& w, LaurentPoly coeff) {
  HeckeElt h(w.rank());
  h.add_term(w, coeff);
  return h;
}

LaurentPoly HeckeElt::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add_term(const AffinePerm& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (w.rank() != n_) throw DomainMismatch("term of rank " + std::to_string(w.rank()) + " added to rank " + std::to_string(n_));
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElt::require_rank(const HeckeElt& other) const {
  if (other.n_ != n_)
    throw DomainMismatch("Hecke elements of rank " + std::to_string(n_) + " and " + std::to_string(other.n_));
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  require_rank(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  require_rank(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt h(n_);
  for (const auto& [w, c] : terms_) h.terms_.emplace(w, -c);
  return h;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff = coeff * c;
  return *this;
}

HeckeElt HeckeElt::times_simple(int i) const {
  HeckeElt out(n_);
  for (const auto& [w, c] : terms_) {
    AffinePerm ws = w.times_simple(i);
    if (!w.has_right_descent(i)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, c * q_minus_one());
      out.add_term(ws, c * q_poly());
    }
  }
  return out;
}

HeckeElt HeckeElt::times_rho(int k) const {
  HeckeElt out(n_);
  const AffinePerm r = AffinePerm::rho(n_, k);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w * r, c);
  return out;
}

HeckeElt HeckeElt::times_basis(const AffinePerm& w) const {
  if (w.rank() != n_) throw DomainMismatch("rank mismatch in Hecke product");
  HeckeElt cur = *this;
  for (const Letter& l : reduced_word(w).letters) {
    switch (l.kind) {
      case Letter::Kind::Simple: cur = cur.times_simple(l.index); break;
      case Letter::Kind::Rho: cur = cur.times_rho(1); break;
      case Letter::Kind::RhoInv: cur = cur.times_rho(-1); break;
    }
  }
  return cur;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  a.require_rank(b);
  HeckeElt out(a.n_);
  for (const auto& [w, c] : b.terms_) out += a.times_basis(w) * c;
  return out;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) { return a * b; }

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const AffinePerm*, const LaurentPoly*>> order;
  for (const auto& [w, c] : terms_) order.emplace_back(&w, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first->length() > b.first->length(); });
  std::string out;
  for (const auto& [w, c] : order) {
    std::string basis = "T[" + reduced_word(*w).to_string() + "]";
    LaurentPoly coeff = *c;
    bool negative = !out.empty() && coeff.is_monomial() && coeff.terms().front().second < 0;
    if (negative) coeff = -coeff;
    std::string text;
    if (coeff == LaurentPoly(1))
      text = basis;
    else if (coeff == LaurentPoly(-1))
      text = "-" + basis;
    else if (coeff.is_monomial())
      text = coeff.to_string() + "*" + basis;
    else
      text = "(" + coeff.to_string() + ")*" + basis;
    if (out.empty())
      out = text;
    else
      out += (negative ? " - " : " + ") + text;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HeckeElt& h) { return os << h.to_string(); }

HeckeElt t_tilde(const AffinePerm& w) { return HeckeElt::basis(w, vpow(-w.length())); }

HeckeElt t_simple(int n, int i) { return HeckeElt::basis(AffinePerm::simple(n, i)); }

HeckeElt invert_t(const AffinePerm& w) {
  const int n = w.rank();
  // T_w = T_{l_1} ... T_{l_k}; the inverse is the reversed product of letter inverses.
  const Word word = reduced_word(w);
  HeckeElt out(n, 1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    switch (it->kind) {
      case Letter::Kind::Simple: {
        // T_s^-1 = v^2 T_s + (v^2 - 1)
        HeckeElt next = out.times_simple(it->index) * vpow(2);
        next += out * LaurentPoly{{2, 1}, {0, -1}};
        out = std::move(next);
        break;
      }
      case Letter::Kind::Rho: out = out.times_rho(-1); break;
      case Letter::Kind::RhoInv: out = out.times_rho(1); break;
    }
  }
  return out;
}

namespace {

struct XCache {
  std::mutex mu;
  std::map<std::pair<int, int>, HeckeElt> values;
  std::map<std::pair<int, int>, HeckeElt> inverses;
};

XCache& x_cache() {
  static XCache cache;
  return cache;
}

void check_x_index(int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw InvalidArgument("X index " + std::to_string(i) + " out of range for rank " + std::to_string(n));
}

}  // namespace

HeckeElt x_element(int n, int i) {
  check_x_index(n, i);
  auto& cache = x_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.values.find({n, i}); it != cache.values.end()) return it->second;
  }
  HeckeElt x(n);
  if (i == n) {
    x = HeckeElt(n, vpow(1 - n)).times_rho(-1);
    for (int j = 1; j < n; ++j) x = x.times_simple(j);
  } else {
    // T_i X_i T_i = v^-2 X_{i+1}
    HeckeElt tinv = invert_t(AffinePerm::simple(n, i));
    x = tinv * x_element(n, i + 1) * tinv * vpow(-2);
  }
  std::lock_guard lock(cache.mu);
  return cache.values.try_emplace({n, i}, std::move(x)).first->second;
}

HeckeElt x_element_inverse(int n, int i) {
  check_x_index(n, i);
  auto& cache = x_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.inverses.find({n, i}); it != cache.inverses.end()) return it->second;
  }
  HeckeElt x(n);
  if (i == n) {
    // X_n^-1 = v^{n-1} T_{n-1}^-1 ... T_1^-1 T_rho
    x = HeckeElt(n, vpow(n - 1));
    for (int j = n - 1; j >= 1; --j) x = x * invert_t(AffinePerm::simple(n, j));
    x = x.times_rho(1);
  } else {
    HeckeElt t = t_simple(n, i);
    x = t * x_element_inverse(n, i + 1) * t * vpow(2);
  }
  std::lock_guard lock(cache.mu);
  return cache.inverses.try_emplace({n, i}, std::move(x)).first->second;
}

HeckeElt x_monomial(std::span<const int> mu) {
  const int n = static_cast<int>(mu.size());
  HeckeElt out(n, 1);
  for (int i = 0; i < n; ++i) {
    if (mu[i] < 0) throw InvalidArgument("negative exponent in X monomial: X_i^-1 is not in the positive part");
    for (int k = 0; k < mu[i]; ++k) out = out * x_element(n, i + 1);
  }
  return out;
}

bool is_even_laurent(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first % 2 == 0; });
}

}  // namespace affhecke
