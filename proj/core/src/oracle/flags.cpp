#include "affhecke/oracle/flags.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "affhecke/errors.hpp"

namespace affhecke::oracle {

bool supported_field(int q) { return q == 2 || q == 3; }

void require_small(int n, int q) {
  if (n < 1 || n > kMaxRank) throw ResourceLimit("oracle rank " + std::to_string(n) + " outside [1, " + std::to_string(kMaxRank) + "]");
  if (!supported_field(q)) throw ResourceLimit("oracle field size " + std::to_string(q) + " not in {2, 3}");
}

VectorSpace::VectorSpace(int n, int q) : n_(n), q_(q), size_(1) {
  require_small(n, q);
  for (int k = 0; k < n; ++k) size_ *= q;
  auto digits = [&](int v) {
    std::vector<int> d(n_);
    for (int k = 0; k < n_; ++k, v /= q_) d[k] = v % q_;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int k = n_ - 1; k >= 0; --k) v = v * q_ + d[k];
    return v;
  };
  add_.resize(static_cast<std::size_t>(size_) * size_);
  scale_.resize(static_cast<std::size_t>(q_) * size_);
  for (int a = 0; a < size_; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < size_; ++b) {
      auto db = digits(b);
      for (int k = 0; k < n_; ++k) db[k] = (da[k] + db[k]) % q_;
      add_[a * size_ + b] = encode(db);
    }
    for (int c = 0; c < q_; ++c) {
      auto dc = da;
      for (auto& x : dc) x = (x * c) % q_;
      scale_[c * size_ + a] = encode(dc);
    }
  }

  // Subspaces by dimension: extend each subspace by every vector outside it.
  by_dim_.resize(n_ + 1);
  Subspace zero;
  zero.set(0);
  by_dim_[0] = {zero};
  for (int k = 0; k < n_; ++k) {
    std::set<Subspace> next;
    for (const Subspace& s : by_dim_[k]) {
      std::vector<int> members;
      for (int v = 0; v < size_; ++v)
        if (s.test(v)) members.push_back(v);
      for (int v = 0; v < size_; ++v) {
        if (s.test(v)) continue;
        Subspace t;
        for (int c = 0; c < q_; ++c)
          for (int m : members) t.set(add(m, scale(c, v)));
        next.insert(t);
      }
    }
    by_dim_[k + 1].assign(next.begin(), next.end());
  }
}

int VectorSpace::dim(const Subspace& s) const {
  int size = s.count();
  int d = 0;
  while (size > 1) {
    size /= q_;
    ++d;
  }
  return d;
}

int VectorSpace::apply(std::span<const int> cols, int v) const {
  int out = 0;
  for (int k = 0; k < n_; ++k, v /= q_) out = add(out, scale(v % q_, cols[k]));
  return out;
}

std::vector<int> cumulative_dims(std::span<const int> parts) {
  std::vector<int> out(parts.size());
  std::partial_sum(parts.begin(), parts.end(), out.begin());
  return out;
}

Composition complete_type(int n) { return Composition(static_cast<std::size_t>(n), 1); }

namespace {

void extend_flags(const VectorSpace& space, const std::vector<int>& dims, Flag& cur, std::vector<Flag>& out) {
  if (cur.size() == dims.size()) {
    out.push_back(cur);
    return;
  }
  const int d = dims[cur.size()];
  for (const Subspace& s : space.subspaces(d)) {
    if (!cur.empty() && !cur.back().subset_of(s)) continue;
    cur.push_back(s);
    extend_flags(space, dims, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Flag> enumerate_flags(const VectorSpace& space, std::span<const int> parts) {
  if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw InvalidArgument("flag type must be a nonempty composition with nonnegative parts");
  const auto dims = cumulative_dims(parts);
  if (dims.back() != space.rank())
    throw InvalidArgument("flag type " + parts_to_string(parts) + " is not a composition of " + std::to_string(space.rank()));
  std::vector<Flag> out;
  Flag cur;
  extend_flags(space, dims, cur, out);
  return out;
}

std::vector<Flag> enumerate_flags(int n, int q, std::span<const int> parts) {
  const VectorSpace space(n, q);
  return enumerate_flags(space, parts);
}

OrbitLabel relative_position(const VectorSpace& space, const Flag& a, const Flag& b) {
  OrbitLabel out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(static_cast<std::uint8_t>(space.dim(x & y)));
  return out;
}

AffinePerm permutation_of(const OrbitLabel& label, int n) {
  if (label.size() != static_cast<std::size_t>(n) * n) throw DomainMismatch("label is not an n x n relative position");
  auto r = [&](int i, int j) -> int { return (i == 0 || j == 0) ? 0 : label[(i - 1) * n + (j - 1)]; };
  std::vector<int> window(n, 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (r(i, j) - r(i - 1, j) - r(i, j - 1) + r(i - 1, j - 1) == 1) window[j - 1] = i;
  return AffinePerm(window);
}

Flag forget(const Flag& flag, std::span<const int> from, std::span<const int> to) {
  const auto from_dims = cumulative_dims(from);
  const auto to_dims = cumulative_dims(to);
  Flag out;
  out.reserve(to_dims.size());
  for (int d : to_dims) {
    if (d == 0) {
      Subspace zero;
      zero.set(0);
      out.push_back(zero);
      continue;
    }
    auto it = std::find(from_dims.begin(), from_dims.end(), d);
    if (it == from_dims.end())
      throw InvalidArgument("type " + parts_to_string(to) + " is not coarser than " + parts_to_string(from));
    out.push_back(flag[it - from_dims.begin()]);
  }
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool labels_match_group_orbits(int n, int q, std::span<const int> left, std::span<const int> right) {
  const VectorSpace space(n, q);
  const auto xs = enumerate_flags(space, left);
  const auto ys = enumerate_flags(space, right);
  std::map<Flag, std::size_t> x_index, y_index;
  for (std::size_t i = 0; i < xs.size(); ++i) x_index.emplace(xs[i], i);
  for (std::size_t i = 0; i < ys.size(); ++i) y_index.emplace(ys[i], i);

  std::vector<std::size_t> parent(xs.size() * ys.size());
  std::iota(parent.begin(), parent.end(), 0);

  auto image = [&](std::span<const int> cols, const Flag& f) {
    Flag g;
    for (const auto& s : f) {
      Subspace t;
      for (int v = 0; v < space.size(); ++v)
        if (s.test(v)) t.set(space.apply(cols, v));
      g.push_back(t);
    }
    return g;
  };

  // Every matrix is a tuple of n column vectors; keep the invertible ones.
  std::vector<int> cols(n, 0);
  long long total = 1;
  for (int k = 0; k < n; ++k) total *= space.size();
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int k = 0; k < n; ++k, c /= space.size()) cols[k] = static_cast<int>(c % space.size());
    std::vector<bool> hit(space.size(), false);
    bool invertible = true;
    for (int v = 0; v < space.size() && invertible; ++v) {
      const int w = space.apply(cols, v);
      if (hit[w]) invertible = false;
      hit[w] = true;
    }
    if (!invertible) continue;
    std::vector<std::size_t> gx(xs.size()), gy(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) gx[i] = x_index.at(image(cols, xs[i]));
    for (std::size_t j = 0; j < ys.size(); ++j) gy[j] = y_index.at(image(cols, ys[j]));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) {
        const auto a = find_root(parent, i * ys.size() + j);
        const auto b = find_root(parent, gx[i] * ys.size() + gy[j]);
        if (a != b) parent[a] = b;
      }
  }

  // Same orbit <=> same label, checked through the induced partitions.
  std::map<std::size_t, OrbitLabel> label_of_root;
  std::map<OrbitLabel, std::size_t> root_of_label;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const auto root = find_root(parent, i * ys.size() + j);
      const auto label = relative_position(space, xs[i], ys[j]);
      auto [it, fresh] = label_of_root.emplace(root, label);
      if (!fresh && it->second != label) return false;
      auto [jt, fresh2] = root_of_label.emplace(label, root);
      if (!fresh2 && jt->second != root) return false;
    }
  return true;
}

}  // namespace affhecke::oracle
