#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ctsum/rational.hpp"

namespace ctsum {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> ascending);

  /// The variable itself.
  static Polynomial identity();
  /// c * var^degree.
  static Polynomial monomial(const Rational& c, int degree);
  /// var - root.
  static Polynomial linear_root(const Rational& root);
  /// prod_{i=lo..hi} (var + i); the empty product is 1.
  static Polynomial rising(int lo, int hi);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of var^i; zero outside the stored range.
  Rational coeff(int i) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational eval(const Rational& x) const;
  Polynomial monic() const;
  /// p(var + a).
  Polynomial shift(const Rational& a) const;
  Polynomial derivative() const;
  /// Fujiwara-type bound B with |root| <= B for every complex root (1 for constants).
  Rational root_bound() const;

  std::string to_string(char var = 'j') const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd. Throws when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

inline Polynomial poly_shift(const Polynomial& p, int a) { return p.shift(Rational(a)); }
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

}  // namespace ctsum
