// Truncated Laurent series over exact rationals, plus a Newton solver for
// power-series roots of polynomial equations in one unknown.
#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewdyck {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "p/q" (integers as "p/1").
std::string rational_to_string(const Rational& q);

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Laurent series in z known modulo z^precision.
///
/// Coefficients are stored from the valuation upward; the leading stored
/// coefficient is nonzero unless the series is zero to its precision, in
/// which case valuation() == precision() and nothing is stored.
class Series {
 public:
  /// The zero series, known modulo z^precision.
  explicit Series(int precision = 0);

  static Series zero(int precision) { return Series(precision); }
  static Series constant(const Rational& c, int precision);
  static Series monomial(const Rational& c, int exponent, int precision);
  /// coeffs[i] is the coefficient of z^(valuation + i); precision is
  /// valuation + coeffs.size().
  static Series from_coeffs(int valuation, std::vector<Rational> coeffs);
  /// Polynomial sum coeffs[i] z^i, truncated to the precision.
  static Series polynomial(const std::vector<Rational>& coeffs, int precision);

  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  /// Number of known coefficients from the valuation on.
  int order() const { return precision_ - valuation_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of z^n; zero below the valuation. Throws SeriesError when
  /// n >= precision().
  Rational coeff(int n) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;

  /// Drops every term at or above z^precision (no-op if already coarser).
  Series truncated(int precision) const;
  /// Raises the precision, treating the newly exposed terms as zero (or
  /// truncates when precision is lower).
  Series extended(int precision) const;
  /// Multiplies by z^k exactly.
  Series shifted(int k) const;

  Series operator-() const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  /// a + c for a constant c (applied only if z^0 is within precision).
  friend Series operator+(const Series& a, const Rational& c);
  friend Series operator-(const Series& a, const Rational& c) {
    return a + Rational(-c);
  }
  friend Series operator-(const Rational& c, const Series& a) { return -a + c; }

  /// Exact equality of precision-aware representation.
  friend bool operator==(const Series& a, const Series& b);

  /// True when a - b is zero to the coarser of the two precisions.
  bool agrees_with(const Series& other) const;

  Series reciprocal() const;
  Series sqrt() const;
  /// Integer power; negative exponents go through the reciprocal.
  Series pow(int exponent) const;

  /// Human-readable form such as "z^-1 - z^2 - 2*z^5 + O(z^8)".
  std::string to_string(std::string_view var = "z") const;

  nlohmann::json to_json() const;
  static Series from_json(const nlohmann::json& j);

 private:
  void normalize();

  int valuation_ = 0;
  int precision_ = 0;
  std::vector<Rational> coeffs_;
};

Series operator/(const Series& a, const Series& b);

/// Dense polynomial in z with rational coefficients.
struct ZPolynomial {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies z^i

  bool is_zero() const;
  Rational at_zero() const { return coeffs.empty() ? Rational(0) : coeffs[0]; }
  void add_term(int exponent, const Rational& c);
  Series as_series(int precision) const { return Series::polynomial(coeffs, precision); }
};

/// P(v, z) = sum_p coeff_p(z) v^p.
class AlgebraicEq {
 public:
  AlgebraicEq() = default;

  /// Adds c * z^z_exponent * v^v_power.
  AlgebraicEq& add_term(int v_power, int z_exponent, const Rational& c);

  int degree() const { return static_cast<int>(by_power_.size()) - 1; }
  const std::vector<ZPolynomial>& by_power() const { return by_power_; }
  bool is_zero() const;

  /// d/dv.
  AlgebraicEq derivative() const;
  /// Substitutes v = z^shift * w and divides out the largest common power
  /// of z, so the result has polynomial coefficients again.
  AlgebraicEq rescaled(int shift) const;

  Rational at_zero(const Rational& v0) const;
  /// P(v(z), z) computed modulo z^precision.
  Series evaluate(const Series& v, int precision) const;
  /// P(v(z), z) with precision inherited from v.
  Series evaluate(const Series& v) const;

  std::string to_string(std::string_view unknown = "v", std::string_view var = "z") const;

 private:
  std::vector<ZPolynomial> by_power_;
};

/// Power-series root v(z) of eq with v(0) = seed, known modulo z^precision.
/// Newton iteration with precision doubling; the residual is checked before
/// returning. Throws SeriesError for a non-root seed or a ramified root.
Series newton_root(const AlgebraicEq& eq, const Rational& seed, int precision);

}  // namespace skewdyck
