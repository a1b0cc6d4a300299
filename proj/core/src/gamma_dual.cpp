#include "ctsum/gamma_dual.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "ctsum/combinatorics.hpp"

namespace ctsum {

GammaDual GammaDual::reciprocal() const {
  if (value.is_zero()) throw std::domain_error("reciprocal of a gamma-dual with zero value");
  const Rational inv = value.reciprocal();
  const Rational inv2 = inv * inv;
  return {inv, -d * inv2, -dgamma * inv2};
}

GammaDual& GammaDual::operator+=(const GammaDual& rhs) {
  value += rhs.value;
  d += rhs.d;
  dgamma += rhs.dgamma;
  return *this;
}

GammaDual& GammaDual::operator-=(const GammaDual& rhs) {
  value -= rhs.value;
  d -= rhs.d;
  dgamma -= rhs.dgamma;
  return *this;
}

GammaDual& GammaDual::operator*=(const GammaDual& rhs) {
  Rational nd = value * rhs.d + rhs.value * d;
  Rational ng = value * rhs.dgamma + rhs.value * dgamma;
  value *= rhs.value;
  d = std::move(nd);
  dgamma = std::move(ng);
  return *this;
}

GammaDual& GammaDual::operator*=(const Rational& scale) {
  value *= scale;
  d *= scale;
  dgamma *= scale;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GammaDual& g) {
  return os << "(" << g.value << ", " << g.d << ", " << g.dgamma << ")";
}

GammaDual gdual_recip_factorial(int m) {
  if (m >= 0) {
    const Rational r = recip_factorial(m);
    return {r, -harmonic(m) * r, r};
  }
  const int q = -m - 1;
  Rational d(factorial(q));
  if (q % 2 == 1) d = -d;
  return {0, d, 0};
}

GammaDual gdual_factorial(int m) {
  if (m < 0) throw std::domain_error("(m+x)! has a pole at x = 0 for m = " + std::to_string(m));
  return gdual_recip_factorial(m).reciprocal();
}

}  // namespace ctsum
