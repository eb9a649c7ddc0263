#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyconj {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p/q" or a decimal-free integer into a canonical rational.
Rational parse_rational(std::string_view text);
/// Canonical "num/den" form; integers print without a denominator.
std::string format_rational(const Rational& q);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `degree()` is -1 for it.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// x - root
  static RatPoly linear_factor(const Rational& root);
  /// Product of (x - r) over the given roots.
  static RatPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;
  double eval(double x) const;

  RatPoly derivative(int order = 1) const;
  /// p(x + c)
  RatPoly shifted(const Rational& c) const;
  /// p(-x)
  RatPoly reflected() const;
  /// x^deg p(1/x)
  RatPoly reversed() const;
  RatPoly monic() const;
  /// Scales so the leading coefficient is positive with magnitude 1.
  RatPoly normalized_sign() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::vector<double> to_double() const;

  /// `[c0, c1, ...]` with every coefficient as a num/den string.
  std::string to_list_string() const;
  /// `c0 + c1*x + c2*x^2 ...`
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

/// Euclidean division; throws ZeroPolynomial on a zero divisor.
DivMod divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly pow(const RatPoly& p, int exponent);

/// Accepts either the list form `[c0, c1, ...]` or a sum of terms such as
/// `1 - 3/2*x + x^3`.
RatPoly parse_poly(std::string_view text);

}  // namespace polyconj
