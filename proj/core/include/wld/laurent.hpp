#pragma once

// Integer Laurent polynomials in one variable t.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wld {

using Integer = mpz_class;

class LaurentPolynomial {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);  // NOLINT(google-explicit-constructor): constants
  LaurentPolynomial(const Integer& c);  // NOLINT
  static LaurentPolynomial monomial(const Integer& c, std::int64_t e);
  static LaurentPolynomial t(std::int64_t e = 1) { return monomial(1, e); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(std::int64_t e) const;
  /// Lowest / highest exponent; zero polynomial has neither (throws).
  std::int64_t low() const;
  std::int64_t high() const;
  /// high - low, or -1 for zero.
  std::int64_t span() const noexcept;
  Integer content() const;
  /// Value at t = 1.
  Integer at_one() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial operator-() const;
  LaurentPolynomial shifted(std::int64_t by) const;  // multiplied by t^by

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  /// Exact division; throws std::domain_error if b does not divide a in
  /// Z[t, t^-1].
  friend LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void add_term(std::int64_t e, const Integer& c);
  Terms terms_;
};

/// Representative of p up to multiplication by +-t^r: lowest exponent 0 and
/// positive trailing coefficient. Zero stays zero.
LaurentPolynomial normalize_units(const LaurentPolynomial& p);

/// True if p = +-t^r.
bool is_unit(const LaurentPolynomial& p);

/// gcd up to units, normalized; gcd of an empty list (or all zeros) is 0.
LaurentPolynomial poly_gcd(const std::vector<LaurentPolynomial>& ps);
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// "1 - t + t^2", "t^-1 + 1", "-3t^2", "0". Terms sorted by exponent.
std::string to_string(const LaurentPolynomial& p);
/// Accepts the output of to_string plus free spacing and "2*t".
LaurentPolynomial parse_laurent(std::string_view text);

}  // namespace wld
