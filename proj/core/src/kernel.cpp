#include "ctsum/kernel.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ctsum/combinatorics.hpp"

namespace ctsum {
namespace {

void split(const TermKernel& t, std::vector<int>& upper, std::vector<int>& lower) {
  for (const auto& f : t.factorials) {
    if (f.exponent == 1) {
      upper.push_back(f.shift);
    } else if (f.exponent == -1) {
      lower.push_back(f.shift);
    } else {
      throw std::invalid_argument("factorial exponent must be +1 or -1");
    }
  }
}

}  // namespace

TermKernel TermKernel::make(const Rational& constant, std::initializer_list<int> upper,
                            std::initializer_list<int> lower, Polynomial poly) {
  TermKernel t;
  t.constant = constant;
  t.polyfactor = std::move(poly);
  for (int s : upper) t.factorials.push_back({s, 1});
  for (int s : lower) t.factorials.push_back({s, -1});
  return t;
}

bool TermKernel::balanced() const {
  int net = 0;
  for (const auto& f : factorials) net += f.exponent;
  return net == 0;
}

bool TermSum::balanced() const {
  return std::all_of(terms.begin(), terms.end(), [](const TermKernel& t) { return t.balanced(); });
}

TermSum TermSum::scaled(const Rational& s) const {
  TermSum out = *this;
  for (auto& t : out.terms) t.constant *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const TermKernel& t) {
  os << t.constant;
  if (t.polyfactor != Polynomial(1)) os << "*(" << t.polyfactor << ')';
  for (const auto& f : t.factorials) {
    os << (f.exponent > 0 ? " * " : " / ") << "(j" << (f.shift < 0 ? "" : "+") << f.shift << ")!";
  }
  return os;
}

Rational kernel_eval(const TermKernel& t, int j) {
  if (j < 0) throw std::domain_error("kernel evaluated at negative j");
  Rational value = t.constant * t.polyfactor.eval(Rational(j));
  for (const auto& f : t.factorials) {
    if (value.is_zero()) break;
    const int m = j + f.shift;
    if (f.exponent > 0) {
      if (m < 0) throw std::domain_error("factorial of negative argument " + std::to_string(m) + " in numerator");
      value *= Rational(factorial(m));
    } else {
      value *= recip_factorial(m);
    }
  }
  return value;
}

Rational kernel_eval(const TermSum& t, int j) {
  Rational sum;
  for (const auto& term : t.terms) sum += kernel_eval(term, j);
  return sum;
}

RationalFunction kernel_to_rf(const TermKernel& t) {
  if (!t.balanced()) throw std::invalid_argument("unbalanced kernel is not rational in j");
  std::vector<int> upper;
  std::vector<int> lower;
  split(t, upper, lower);
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  Polynomial num = t.polyfactor * t.constant;
  Polynomial den(1);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const int a = upper[i];
    const int b = lower[i];
    if (a >= b) {
      num *= Polynomial::rising(b + 1, a);
    } else {
      den *= Polynomial::rising(a + 1, b);
    }
  }
  return RationalFunction::reduce(num, den);
}

RationalFunction kernel_to_rf(const TermSum& t) {
  RationalFunction sum;
  for (const auto& term : t.terms) sum += kernel_to_rf(term);
  return sum;
}

RationalFunction kernel_ratio(const TermKernel& t) {
  if (t.constant.is_zero() || t.polyfactor.is_zero()) throw std::domain_error("ratio of a zero kernel");
  Polynomial num = t.polyfactor.shift(1);
  Polynomial den = t.polyfactor;
  for (const auto& f : t.factorials) {
    const Polynomial step = Polynomial::linear_root(Rational(-(f.shift + 1)));  // j + shift + 1
    if (f.exponent > 0) num *= step; else den *= step;
  }
  return RationalFunction::reduce(num, den);
}

RationalFunction kernel_ratio(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("ratio of the zero function");
  return f.shift(1) / f;
}

Asymptotics kernel_asymptotics(const TermSum& t) {
  const InfinityExpansion e = rf_infinity_expansion(kernel_to_rf(t));
  return {e.slope, e.constant};
}

GammaDual kernel_eval_dual(const DualKernel& t, int j) {
  const TermKernel& k = t.kernel;
  GammaDual value;
  if (t.shifted_by_x) {
    const Rational at(j);
    value = {k.polyfactor.eval(at), k.polyfactor.derivative().eval(at), 0};
    value *= k.constant;
    for (const auto& f : k.factorials) {
      const int m = j + f.shift;
      value *= f.exponent > 0 ? gdual_factorial(m) : gdual_recip_factorial(m);
    }
  } else {
    value = GammaDual::constant(kernel_eval(k, j));
  }
  if (t.linear_in_x) value *= GammaDual::variable();
  return value;
}

GammaDual kernel_eval_dual(const DualTermSum& t, int j) {
  GammaDual sum;
  for (const auto& term : t.terms) sum += kernel_eval_dual(term, j);
  return sum;
}

}  // namespace ctsum
