#include "ctsum/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ctsum {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::identity() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root) {
  return Polynomial(std::vector<Rational>{-root, 1});
}

Polynomial Polynomial::rising(int lo, int hi) {
  Polynomial p(1);
  for (int i = lo; i <= hi; ++i) p *= linear_root(Rational(-i));
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().reciprocal();
}

Polynomial Polynomial::shift(const Rational& a) const {
  // Horner in the shifted variable.
  const Polynomial step = linear_root(-a);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Rational Polynomial::root_bound() const {
  // Fujiwara: 2 * max_i |a_{n-i}/a_n|^{1/i}, kept rational by bounding the
  // i-th root from above with the smallest power of two that exceeds it.
  if (degree() <= 0) return 1;
  const Rational lead = leading().abs();
  const int n = degree();
  Rational best = 1;
  for (int i = 1; i <= n; ++i) {
    Rational ratio = coeff(n - i).abs() / lead;
    if (i == n) ratio /= 2;
    if (ratio.is_zero()) continue;
    Rational r = 1;
    while (r.pow(i) < ratio) r *= 2;
    if (r > best) best = r;
  }
  return best * 2;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      // A leading "-" must be followed by an integer literal, so "-j" renders as "-1*j".
      if (!unit || (first && negative)) os << mag << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Rational inv_lead = b.leading().reciprocal();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(i - db + k)] -= c * bc[static_cast<std::size_t>(k)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = poly_divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

}  // namespace ctsum
