#include "ctsum/partial_fractions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ctsum {
namespace {

// prod_{i=lo..hi} (z - i)
Polynomial falling_roots(int lo, int hi) {
  Polynomial p(1);
  for (int i = lo; i <= hi; ++i) p *= Polynomial::linear_root(Rational(i));
  return p;
}

void add_simple_poles(std::vector<PoleSpec>& poles, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) poles.push_back({Rational(i), 1});
}

int require_j(int id, std::optional<int> j) {
  if (!j) throw std::invalid_argument("identity " + std::to_string(id) + " needs a value for j");
  if (*j < 1) throw std::invalid_argument("j must be >= 1, got " + std::to_string(*j));
  return *j;
}

}  // namespace

const PolePart* Decomposition::find(const Rational& location) const {
  for (const auto& part : parts) {
    if (part.pole.location == location) return &part;
  }
  return nullptr;
}

Rational Decomposition::total_residue() const {
  Rational sum;
  for (const auto& part : parts) sum += part.residue();
  return sum;
}

RationalFunction Decomposition::reconstruct() const {
  RationalFunction sum(polynomial_part);
  for (const auto& part : parts) {
    const Polynomial factor = Polynomial::linear_root(part.pole.location);
    Polynomial power(1);
    // coefficients run from the highest order down to 1
    const int order = static_cast<int>(part.coefficients.size());
    for (int m = 1; m <= order; ++m) {
      power *= factor;
      const Rational& c = part.coefficients[static_cast<std::size_t>(order - m)];
      if (!c.is_zero()) sum += RationalFunction::reduce(Polynomial(c), power);
    }
  }
  return sum;
}

bool Decomposition::same_as(const Decomposition& other) const {
  if (polynomial_part != other.polynomial_part) return false;
  if (parts.size() != other.parts.size()) return false;
  for (const auto& part : parts) {
    const PolePart* match = other.find(part.pole.location);
    if (match == nullptr || *match != part) return false;
  }
  return true;
}

Family build_family(int id, int n, std::optional<int> j) {
  if (n < 1) throw std::invalid_argument("family needs n >= 1, got " + std::to_string(n));
  const Polynomial z = Polynomial::identity();
  const Polynomial rising = Polynomial::rising(1, n);  // (z+1)...(z+n)
  Polynomial num;
  Polynomial den;
  std::vector<PoleSpec> poles;
  switch (id) {
    case 1:
      num = rising;
      den = falling_roots(0, n);
      add_simple_poles(poles, 0, n);
      break;
    case 2:
      num = Polynomial::rising(1, n - 1);
      den = falling_roots(0, n) * Polynomial::linear_root(Rational(-n));
      add_simple_poles(poles, 0, n);
      poles.push_back({Rational(-n), 1});
      break;
    case 3:
    case 5: {
      // base * 1/(j(j+z))  or  base * z/(j(j+z))
      const int jj = require_j(id, j);
      num = id == 3 ? rising : rising * z;
      den = falling_roots(1, n) * Polynomial::linear_root(Rational(-jj)) * Rational(jj);
      add_simple_poles(poles, 1, n);
      if (jj > n) poles.push_back({Rational(-jj), 1});  // else (z + j) cancels
      break;
    }
    case 4:
    case 6: {
      // base * (n+z)/(j(j+n+z)); id 4 keeps the pole at z = 0
      const int jj = require_j(id, j);
      num = rising * Polynomial::linear_root(Rational(-n));
      den = falling_roots(id == 4 ? 0 : 1, n) * Polynomial::linear_root(Rational(-jj - n)) * Rational(jj);
      add_simple_poles(poles, id == 4 ? 0 : 1, n);
      poles.push_back({Rational(-jj - n), 1});
      break;
    }
    case 7: {
      // base * (n-z)/(j(j+n-z)); (n - z) cancels the pole at z = n
      const int jj = require_j(id, j);
      num = rising * (Polynomial(n) - z);
      den = falling_roots(1, n) * (Polynomial(jj + n) - z) * Rational(jj);
      add_simple_poles(poles, 1, n - 1);
      poles.push_back({Rational(n + jj), 1});
      break;
    }
    case 8: {
      // base * (2j+z)/(j^2 (j+z)^2)
      const int jj = require_j(id, j);
      if (jj <= n) {
        throw std::invalid_argument("identity 8 family needs j >= n+1 (got n=" + std::to_string(n) +
                                    ", j=" + std::to_string(jj) + ")");
      }
      const Polynomial zj = Polynomial::linear_root(Rational(-jj));
      num = rising * Polynomial::linear_root(Rational(-2 * jj));
      den = falling_roots(1, n) * zj * zj * Rational(static_cast<long>(jj) * jj);
      add_simple_poles(poles, 1, n);
      poles.push_back({Rational(-jj), 2});
      break;
    }
    default:
      throw std::invalid_argument("unknown identity id " + std::to_string(id));
  }
  return {RationalFunction::reduce(num, den), std::move(poles)};
}

Decomposition decompose(const RationalFunction& r, std::span<const PoleSpec> poles) {
  Polynomial expected(1);
  for (const auto& p : poles) {
    if (p.order != 1 && p.order != 2) {
      throw std::invalid_argument("pole order must be 1 or 2, got " + std::to_string(p.order));
    }
    for (int m = 0; m < p.order; ++m) expected *= Polynomial::linear_root(p.location);
  }
  if (expected != r.denominator()) {
    throw std::invalid_argument("pole list " + expected.to_string('z') + " does not match denominator " +
                                r.denominator().to_string('z'));
  }

  Decomposition out;
  out.polynomial_part = poly_divmod(r.numerator(), r.denominator()).first;
  for (const auto& p : poles) {
    Polynomial cleared(1);
    for (int m = 0; m < p.order; ++m) cleared *= Polynomial::linear_root(p.location);
    const Polynomial rest = poly_exact_div(r.denominator(), cleared);
    const Polynomial& num = r.numerator();
    const Rational rest_at = rest.eval(p.location);
    if (rest_at.is_zero()) throw PoleError(p.location);
    PolePart part{p, {}};
    part.coefficients.push_back(num.eval(p.location) / rest_at);
    if (p.order == 2) {
      // (num/rest)' = (num' rest - num rest') / rest^2
      const Rational dnum = num.derivative().eval(p.location);
      const Rational drest = rest.derivative().eval(p.location);
      part.coefficients.push_back((dnum * rest_at - num.eval(p.location) * drest) / (rest_at * rest_at));
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

bool verify_decomposition(const RationalFunction& r, const Decomposition& d) {
  return d.reconstruct() == r;
}

}  // namespace ctsum
