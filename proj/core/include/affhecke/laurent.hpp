#pragma once

#include <cstdint>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace affhecke {

/// Integer Laurent polynomial in one variable v.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by exponent with
/// no zero coefficient, so equality is structural. Coefficients are 64-bit
/// with checked arithmetic: any overflow raises OverflowError instead of
/// wrapping.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  /// Builds from arbitrary (possibly repeated, zero, unsorted) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  /// Lowest / highest exponent; precondition: nonzero.
  int min_exponent() const;
  int max_exponent() const;

  /// v^k -> v^-k.
  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiply by v^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly&, const LaurentPoly&) = default;

  /// "v^-2-1" style: ascending v-exponent, i.e. descending powers of q = v^-2.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Shorthand for v^k.
inline LaurentPoly vpow(int k) { return LaurentPoly::monomial(1, k); }

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

/// Parses the rendering produced by LaurentPoly::to_string (also accepts
/// spaces, "v", "v^k", "c*v^k", and bare integers in any order).
LaurentPoly parse_laurent(const std::string& text);

}  // namespace affhecke
