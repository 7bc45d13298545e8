#include "affhecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in addition");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    if (!out.empty() && out.back().first == e)
      out.back().second = checked::add(out.back().second, c);
    else
      out.emplace_back(e, c);
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InvalidArgument("min_exponent of the zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InvalidArgument("max_exponent of the zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = checked::mul(t.second, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      std::int64_t c = checked::add(a->second, b->second);
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, checked::mul(ca, cb));
  return LaurentPoly::from_terms(std::move(raw));
}

namespace {

std::string monomial_text(std::int64_t c, int e) {
  if (e == 0) return std::to_string(c);
  std::string var = e == 1 ? "v" : "v^" + std::to_string(e);
  if (c == 1) return var;
  if (c == -1) return "-" + var;
  return std::to_string(c) + "*" + var;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string m = monomial_text(c, e);
    if (!out.empty() && m.front() != '-') out += '+';
    out += m;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(const std::string& s) : s_(s) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty Laurent polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' in Laurent polynomial '" + s_ + "'");
      }
      terms.push_back(monomial(sign));
      first = false;
      skip();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      throw ParseError("expected integer in '" + s_ + "'");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range in '" + s_ + "'");
    }
  }

  LaurentPoly::Term monomial(int sign) {
    std::int64_t c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = integer();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else {
        return {0, c * sign};
      }
    }
    if (peek() != 'v') {
      if (have_coeff) throw ParseError("expected 'v' after '*' in '" + s_ + "'");
      throw ParseError("unexpected character in Laurent polynomial '" + s_ + "'");
    }
    ++pos_;
    skip();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      e = static_cast<int>(integer());
    }
    return {e, c * sign};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) { return LaurentParser(text).parse(); }

}  // namespace affhecke
