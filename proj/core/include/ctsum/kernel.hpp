#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "ctsum/gamma_dual.hpp"
#include "ctsum/rational_function.hpp"

namespace ctsum {

/// (j + shift)!^exponent with exponent +1 or -1.
struct FactorialFactor {
  int shift = 0;
  int exponent = 1;

  friend bool operator==(const FactorialFactor&, const FactorialFactor&) = default;
};

/// constant * polyfactor(j) * prod (j + shift_i)!^{e_i}, for one fixed n.
///
/// Factorials of negative arguments follow the reciprocal-Gamma
/// convention: 1/m! = 0 for m < 0. A kernel is balanced when it has as many
/// factorials upstairs as downstairs; only balanced kernels are rational in j.
struct TermKernel {
  Rational constant{1};
  Polynomial polyfactor{1};
  std::vector<FactorialFactor> factorials;

  static TermKernel make(const Rational& constant, std::initializer_list<int> upper,
                         std::initializer_list<int> lower, Polynomial poly = Polynomial(1));

  bool balanced() const;
};

/// A sum of kernels, e.g. F(n, j) = 1/(j+1) - j!^2/((j-n)!(n+1+j)!).
struct TermSum {
  std::vector<TermKernel> terms;

  TermSum() = default;
  TermSum(std::initializer_list<TermKernel> t) : terms(t) {}
  TermSum(TermKernel t) : terms{std::move(t)} {}  // NOLINT(google-explicit-constructor)

  bool balanced() const;
  TermSum scaled(const Rational& s) const;
};

std::ostream& operator<<(std::ostream& os, const TermKernel& t);

/// Exact value at integer j >= 0. Throws std::domain_error for j < 0 or when a
/// factorial in the numerator has a negative argument.
Rational kernel_eval(const TermKernel& t, int j);
Rational kernel_eval(const TermSum& t, int j);

/// Rational closed form in j: each upstairs (j+a)! is paired with a
/// downstairs (j+b)! and replaced by prod_{i=b+1..a}(j+i), or its reciprocal
/// when a < b. Throws std::invalid_argument for an unbalanced kernel.
RationalFunction kernel_to_rf(const TermKernel& t);
RationalFunction kernel_to_rf(const TermSum& t);

/// t(j+1)/t(j) in reduced form. Works on unbalanced kernels as well, since
/// each (j+s)! contributes the factor (j+s+1)^{+-1}. Throws for a zero input.
RationalFunction kernel_ratio(const TermKernel& t);
RationalFunction kernel_ratio(const RationalFunction& f);

/// t(j) = slope*j + limit_constant + O(1/j).
struct Asymptotics {
  Rational slope;
  Rational limit_constant;
};

/// Delegates to rf_infinity_expansion on the rational form. Throws for
/// unbalanced kernels and for growth of degree >= 2.
Asymptotics kernel_asymptotics(const TermSum& t);

/// A kernel depending on a small parameter x, evaluated as a first-order jet
/// at x = 0.
///
/// shifted_by_x: every factorial argument and the polynomial factor are
/// taken at j + x. linear_in_x: the whole term is multiplied by x.
struct DualKernel {
  TermKernel kernel;
  bool shifted_by_x = true;
  bool linear_in_x = false;
};

struct DualTermSum {
  std::vector<DualKernel> terms;
};

/// Upstairs factorials must have nonnegative arguments (otherwise (m+x)! has
/// a pole); downstairs ones use gdual_recip_factorial.
GammaDual kernel_eval_dual(const DualKernel& t, int j);
GammaDual kernel_eval_dual(const DualTermSum& t, int j);

}  // namespace ctsum
