#include "ctsum/rational_function.hpp"

#include <ostream>
#include <sstream>

namespace ctsum {

PoleError::PoleError(const Rational& at)
    : std::domain_error("rational function evaluated at its pole " + at.to_string()), at_(at) {}

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  const Polynomial g = poly_gcd(num, den);
  Polynomial n = g.degree() > 0 ? poly_exact_div(num, g) : num;
  Polynomial d = g.degree() > 0 ? poly_exact_div(den, g) : den;
  const Rational scale = d.leading().reciprocal();
  r.num_ = n * scale;
  r.den_ = d * scale;
  return r;
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw PoleError(x);
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::shift(const Rational& a) const {
  // Shifting preserves coprimality and the leading coefficient.
  RationalFunction r;
  r.num_ = num_.shift(a);
  r.den_ = den_.shift(a);
  return r;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of the zero rational function");
  return reduce(den_, num_);
}

std::string RationalFunction::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  std::ostringstream os;
  os << '(' << num_.to_string(var) << ")/(" << den_.to_string(var) << ')';
  return os.str();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = reduce(num_ + rhs.num_, den_);
  return *this = reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = reduce(num_ - rhs.num_, den_);
  return *this = reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = reduce(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  return *this = reduce(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

InfinityExpansion rf_infinity_expansion(const RationalFunction& r) {
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  if (num.degree() > den.degree() + 1) {
    throw std::domain_error("rational function grows faster than linearly: " + r.to_string());
  }
  auto [q, rem] = poly_divmod(num, den);
  // den is monic, so rem/den = rem_{deg den - 1} / z + O(1/z^2).
  return {q.coeff(1), q.coeff(0), rem.coeff(den.degree() - 1)};
}

std::set<int> dispersion_set(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("dispersion of a zero polynomial");
  std::set<int> out;
  if (a.degree() == 0 || b.degree() == 0) return out;
  const Integer bound = (a.root_bound() + b.root_bound()).ceil();
  if (!bound.fits_sint_p()) throw std::domain_error("dispersion bound out of range");
  const long limit = bound.get_si();
  for (long h = 0; h <= limit; ++h) {
    if (poly_gcd(a, b.shift(Rational(h))).degree() >= 1) out.insert(static_cast<int>(h));
  }
  return out;
}

}  // namespace ctsum
