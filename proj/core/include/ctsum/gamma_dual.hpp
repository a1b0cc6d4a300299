#pragma once

#include <iosfwd>

#include "ctsum/rational.hpp"

namespace ctsum {

/// First-order jet value + eps * (d + dgamma * gamma) with eps^2 = 0 and
/// Euler's constant gamma kept as a formal symbol.
///
/// The eps direction is a small parameter x added to factorial arguments,
/// so (m + x)! and 1/(m + x)! can be differentiated at x = 0 exactly. Every
/// balanced factorial quotient comes out with dgamma = 0.
struct GammaDual {
  Rational value;
  Rational d;
  Rational dgamma;

  static GammaDual constant(const Rational& v) { return {v, 0, 0}; }
  /// The parameter x itself: 0 + eps.
  static GammaDual variable() { return {0, 1, 0}; }

  bool is_gamma_free() const { return dgamma.is_zero(); }

  /// Defined only for nonzero value.
  GammaDual reciprocal() const;

  GammaDual& operator+=(const GammaDual& rhs);
  GammaDual& operator-=(const GammaDual& rhs);
  GammaDual& operator*=(const GammaDual& rhs);
  GammaDual& operator*=(const Rational& scale);

  friend GammaDual operator+(GammaDual a, const GammaDual& b) { return a += b; }
  friend GammaDual operator-(GammaDual a, const GammaDual& b) { return a -= b; }
  friend GammaDual operator*(GammaDual a, const GammaDual& b) { return a *= b; }
  friend GammaDual operator*(GammaDual a, const Rational& s) { return a *= s; }
  friend GammaDual operator*(const Rational& s, GammaDual a) { return a *= s; }
  friend GammaDual operator-(const GammaDual& a) { return {-a.value, -a.d, -a.dgamma}; }

  friend bool operator==(const GammaDual&, const GammaDual&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GammaDual& g);
};

/// Jet of x -> 1/(m+x)! at x = 0.
///   m >= 0: (1/m!, -H_m/m!, 1/m!)            since d/dx 1/Gamma(1+m+x) = (gamma - H_m)/m!
///   m <  0: (0, (-1)^(-m-1) (-m-1)!, 0)      first-order zero of 1/Gamma
GammaDual gdual_recip_factorial(int m);

/// Jet of x -> (m+x)! at x = 0; needs m >= 0 (a pole otherwise).
GammaDual gdual_factorial(int m);

}  // namespace ctsum
