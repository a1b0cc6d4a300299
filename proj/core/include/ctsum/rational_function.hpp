#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>

#include "ctsum/polynomial.hpp"

namespace ctsum {

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const Rational& at);
  const Rational& at() const { return at_; }

 private:
  Rational at_;
};

/// num/den in normal form: gcd(num, den) = 1 and den monic. Under this
/// normal form structural equality is equality of functions.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : RationalFunction(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  /// Normalizes num/den. Throws std::domain_error for a zero denominator.
  static RationalFunction reduce(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws PoleError when the denominator vanishes at x.
  Rational eval(const Rational& x) const;
  /// R(var + a).
  RationalFunction shift(const Rational& a) const;
  RationalFunction reciprocal() const;

  std::string to_string(char var = 'j') const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

 private:
  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction rf_reduce(const Polynomial& num, const Polynomial& den) {
  return RationalFunction::reduce(num, den);
}
inline Rational rf_eval(const RationalFunction& r, const Rational& x) { return r.eval(x); }

/// R(z) = slope*z + constant + inv_coeff/z + O(1/z^2) as z -> infinity.
struct InfinityExpansion {
  Rational slope;
  Rational constant;
  Rational inv_coeff;
};

/// Throws std::domain_error when deg num > deg den + 1.
InfinityExpansion rf_infinity_expansion(const RationalFunction& r);

/// All h >= 0 with deg gcd(a(j), b(j+h)) >= 1. Candidates run from 0 to the
/// sum of the root bounds of a and b. Throws for zero inputs.
std::set<int> dispersion_set(const Polynomial& a, const Polynomial& b);

}  // namespace ctsum
