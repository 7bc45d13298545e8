#include "affhecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

// Residue of x in [1, n].
int residue(int x, int n) {
  int r = x % n;
  if (r <= 0) r += n;
  return r;
}

int ceil_div(int a, int n) {
  int q = a / n;
  if (a % n != 0 && a > 0) ++q;
  return q;
}

void require_same_rank(const AffinePerm& a, const AffinePerm& b) {
  if (a.rank() != b.rank())
    throw DomainMismatch("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

}  // namespace

AffinePerm::AffinePerm(int n) : window_(static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  std::iota(window_.begin(), window_.end(), 1);
}

AffinePerm::AffinePerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  if (n < 1) throw InvalidArgument("empty window");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : window_) {
    auto r = static_cast<std::size_t>(residue(x, n) - 1);
    if (seen[r]) throw InvalidArgument("window " + to_string() + " repeats a residue mod " + std::to_string(n));
    seen[r] = true;
  }
}

AffinePerm AffinePerm::simple(int n, int i) {
  if (n < 2) throw InvalidArgument("simple reflections need rank >= 2");
  if (i < 0 || i >= n) throw InvalidArgument("simple reflection index " + std::to_string(i) + " out of range");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int r = j % n;
    if (r == i)
      w[j - 1] = j + 1;
    else if (r == (i + 1) % n)
      w[j - 1] = j - 1;
    else
      w[j - 1] = j;
  }
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::rho(int n, int k) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) w[j - 1] = j + k;
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::translation(std::span<const int> lambda) {
  std::vector<int> sigma(lambda.size());
  std::iota(sigma.begin(), sigma.end(), 1);
  return from_pair(sigma, lambda);
}

AffinePerm AffinePerm::from_pair(std::span<const int> sigma, std::span<const int> lambda) {
  const int n = static_cast<int>(sigma.size());
  if (lambda.size() != sigma.size()) throw DomainMismatch("permutation and translation lengths differ");
  std::vector<int> w(sigma.size());
  for (int i = 0; i < n; ++i) {
    int s = sigma[i];
    if (s < 1 || s > n) throw InvalidArgument("permutation value out of range");
    w[i] = s + n * lambda[s - 1];
  }
  return AffinePerm(std::move(w));
}

int AffinePerm::operator()(int x) const {
  const int n = rank();
  int r = residue(x, n);
  return window_[r - 1] + (x - r);
}

AffinePerm AffinePerm::inverse() const {
  const int n = rank();
  std::vector<int> inv(window_.size());
  for (int i = 1; i <= n; ++i) {
    int y = window_[i - 1];
    int r = residue(y, n);
    inv[r - 1] = i - (y - r);
  }
  return AffinePerm(std::move(inv));
}

AffinePerm operator*(const AffinePerm& u, const AffinePerm& w) {
  require_same_rank(u, w);
  std::vector<int> out(w.window_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(w.window_[i]);
  return AffinePerm(std::move(out));
}

AffinePerm AffinePerm::times_simple(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw InvalidArgument("simple reflection index out of range");
  std::vector<int> out = window_;
  if (i == 0) {
    // positions 0 and 1: w(0) = w(n) - n
    int w0 = window_[n - 1] - n;
    int w1 = window_[0];
    out[0] = w0;
    out[n - 1] = w1 + n;
  } else {
    std::swap(out[i - 1], out[i]);
  }
  AffinePerm r(n);
  r.window_ = std::move(out);
  return r;
}

AffinePerm AffinePerm::simple_times(int i) const { return simple(rank(), i) * *this; }

std::pair<std::vector<int>, std::vector<int>> AffinePerm::to_pair() const {
  const int n = rank();
  std::vector<int> sigma(window_.size()), lambda(window_.size());
  for (int i = 0; i < n; ++i) {
    int s = residue(window_[i], n);
    sigma[i] = s;
    lambda[s - 1] = (window_[i] - s) / n;
  }
  return {sigma, lambda};
}

int AffinePerm::length() const {
  const int n = rank();
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int k_min = j > i ? 0 : 1;
      int c = ceil_div(window_[i - 1] - window_[j - 1], n) - k_min;
      if (c > 0) total += c;
    }
  }
  return total;
}

int AffinePerm::degree() const {
  const int n = rank();
  long long s = 0;
  for (int x : window_) s += x;
  s -= static_cast<long long>(n) * (n + 1) / 2;
  return static_cast<int>(s / n);
}

bool AffinePerm::has_right_descent(int i) const {
  if (i < 0 || i >= rank()) throw InvalidArgument("descent index " + std::to_string(i) + " out of range");
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePerm::has_left_descent(int i) const {
  if (i < 0 || i >= rank()) throw InvalidArgument("descent index " + std::to_string(i) + " out of range");
  AffinePerm inv = inverse();
  return inv(i) > inv(i + 1);
}

bool AffinePerm::is_positive() const {
  const int n = rank();
  return std::all_of(window_.begin(), window_.end(), [n](int x) { return x <= n; });
}

bool AffinePerm::is_finite_perm() const {
  const int n = rank();
  return std::all_of(window_.begin(), window_.end(), [n](int x) { return x >= 1 && x <= n; });
}

std::string AffinePerm::to_string() const {
  std::string s = "w[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const AffinePerm& w) { return os << w.to_string(); }

// ---------------------------------------------------------------------------
// Words

AffinePerm Word::evaluate() const {
  AffinePerm w(n);
  for (const Letter& l : letters) {
    switch (l.kind) {
      case Letter::Kind::Simple: w = w.times_simple(l.index); break;
      case Letter::Kind::Rho: w = w * AffinePerm::rho(n, 1); break;
      case Letter::Kind::RhoInv: w = w * AffinePerm::rho(n, -1); break;
    }
  }
  return w;
}

int Word::simple_count() const { return count(Letter::Kind::Simple); }

int Word::count(Letter::Kind kind) const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [kind](const Letter& l) { return l.kind == kind; }));
}

std::string Word::to_string() const {
  std::string s;
  for (const Letter& l : letters) {
    if (!s.empty()) s += ' ';
    switch (l.kind) {
      case Letter::Kind::Simple: s += "s" + std::to_string(l.index); break;
      case Letter::Kind::Rho: s += "r"; break;
      case Letter::Kind::RhoInv: s += "r-"; break;
    }
  }
  return s;
}

Word parse_word(int n, const std::string& text) {
  Word w{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "r") {
      w.letters.push_back(Letter::r());
    } else if (tok == "r-") {
      w.letters.push_back(Letter::r_inv());
    } else if (tok.size() >= 2 && tok[0] == 's' &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(tok.substr(1));
      if (i >= n) throw ParseError("letter '" + tok + "' out of range for rank " + std::to_string(n));
      w.letters.push_back(Letter::s(i));
    } else {
      throw ParseError("unknown word letter '" + tok + "'");
    }
  }
  return w;
}

AffinePerm parse_window(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 4 || s.compare(0, 2, "w[") != 0 || s.back() != ']')
    throw ParseError("expected window syntax w[a1,...,an], got '" + text + "'");
  std::vector<int> vals;
  std::string body = s.substr(2, s.size() - 3);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad window entry '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad window entry '" + tok + "'");
    vals.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return AffinePerm(std::move(vals));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Word reduced_word(const AffinePerm& w) {
  const int n = w.rank();
  std::vector<int> stripped;
  AffinePerm cur = w;
  int len = cur.length();
  while (len > 0) {
    int i = 0;
    while (!cur.has_right_descent(i)) ++i;
    stripped.push_back(i);
    cur = cur.times_simple(i);
    --len;
  }
  // w = rho^z s_{i_k} ... s_{i_1}, and rho^z s_j = s_{j+z} rho^z.
  const int z = cur.degree();
  Word word{n, {}};
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it)
    word.letters.push_back(Letter::s(((*it + z) % n + n) % n));
  for (int k = 0; k < std::abs(z); ++k) word.letters.push_back(z > 0 ? Letter::r() : Letter::r_inv());
  return word;
}

Word positive_reduced_word(const AffinePerm& w) {
  if (!w.is_positive()) throw NotPositive(w.to_string() + " is not in the positive cone");
  const int n = w.rank();
  // Letters are produced right to left.
  std::vector<Letter> suffix;
  AffinePerm cur = w;
  for (;;) {
    const int k = cur.length();
    const int d = cur.degree();
    if (k == 0) {
      for (int j = 0; j < -d; ++j) suffix.push_back(Letter::r_inv());
      break;
    }
    int i = 1;
    while (i < n && !cur.has_right_descent(i)) ++i;
    if (i < n) {
      suffix.push_back(Letter::s(i));
      cur = cur.times_simple(i);
      continue;
    }
    // Only s_0 descends. cur = (cur s_0 rho) rho^-1 s_0 and rho^-1 s_0 = s_{n-1} rho^-1.
    if (d == 0) throw InternalInvariant("degree-0 positive element with an s_0 descent");
    suffix.push_back(Letter::r_inv());
    suffix.push_back(Letter::s(n - 1));
    cur = cur.times_simple(0) * AffinePerm::rho(n, 1);
    if (!cur.is_positive()) throw InternalInvariant("s_0 trade left the positive cone");
  }
  Word word{n, {suffix.rbegin(), suffix.rend()}};
  return word;
}

namespace {

// Bruhat order in the Coxeter subgroup via the lifting property.
bool bruhat_leq_coxeter(AffinePerm x, AffinePerm w) {
  int lx = x.length();
  int lw = w.length();
  while (true) {
    if (lx > lw) return false;
    if (lw == 0) return x == w;
    if (lx == 0) return true;  // identity is below everything in the same coset
    int i = 0;
    while (!w.has_right_descent(i)) ++i;
    if (x.has_right_descent(i)) {
      x = x.times_simple(i);
      --lx;
    }
    w = w.times_simple(i);
    --lw;
  }
}

}  // namespace

bool bruhat_leq(const AffinePerm& x, const AffinePerm& w) {
  require_same_rank(x, w);
  const int z = w.degree();
  if (x.degree() != z) return false;
  const AffinePerm shift = AffinePerm::rho(w.rank(), -z);
  return bruhat_leq_coxeter(x * shift, w * shift);
}

std::vector<AffinePerm> coxeter_ball(int n, int max_length) {
  std::vector<AffinePerm> layer{AffinePerm(n)};
  std::vector<AffinePerm> all = layer;
  for (int len = 0; len < max_length; ++len) {
    std::set<AffinePerm> next;
    for (const auto& w : layer)
      for (int i = 0; i < n; ++i)
        if (!w.has_right_descent(i)) next.insert(w.times_simple(i));
    layer.assign(next.begin(), next.end());
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

std::vector<AffinePerm> finite_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<AffinePerm> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(out.begin(), out.end(), [](const AffinePerm& a, const AffinePerm& b) { return a.length() < b.length(); });
  return out;
}

std::vector<AffinePerm> positive_elements(int n, int max_length, int max_neg_degree) {
  std::vector<AffinePerm> out;
  const auto perms = finite_perms(n);
  for (int m = 0; m <= max_neg_degree; ++m) {
    for (const auto& mu : compositions(m, n)) {
      std::vector<int> lambda(mu.size());
      std::transform(mu.begin(), mu.end(), lambda.begin(), [](int x) { return -x; });
      for (const auto& s : perms) {
        AffinePerm w = AffinePerm::from_pair(s.window(), lambda);
        if (w.length() <= max_length) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AffinePerm& a, const AffinePerm& b) {
    auto ka = std::make_tuple(a.length(), -a.degree());
    auto kb = std::make_tuple(b.length(), -b.degree());
    if (ka != kb) return ka < kb;
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Compositions and partitions

bool is_partition(std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Composition dom(std::span<const int> mu) {
  if (std::any_of(mu.begin(), mu.end(), [](int x) { return x < 0; }))
    throw InvalidArgument("dom requires nonnegative parts, got " + parts_to_string(mu));
  Composition out(mu.begin(), mu.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Composition reverse_parts(std::span<const int> lambda) { return {lambda.rbegin(), lambda.rend()}; }

bool componentwise_geq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw DomainMismatch("compared compositions have different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Composition omega(int n, int d) {
  if (d < n) throw InvalidArgument("omega needs d >= n");
  Composition c(static_cast<std::size_t>(d), 0);
  std::fill(c.begin(), c.begin() + n, 1);
  return c;
}

namespace {

void compositions_rec(int remaining, int slots, Composition& cur, std::vector<Composition>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    cur.push_back(first);
    compositions_rec(remaining - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  if (d <= 0) return out;
  Composition cur;
  compositions_rec(n, d, cur, out);
  return out;
}

Composition parse_parts(const std::string& text) {
  Composition out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(tok, &used));
    } catch (const std::exception&) {
      throw ParseError("bad part '" + tok + "' in '" + text + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw ParseError("bad part '" + tok + "' in '" + text + "'");
  }
  if (out.empty()) throw ParseError("empty part list");
  return out;
}

std::string parts_to_string(std::span<const int> parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace affhecke
