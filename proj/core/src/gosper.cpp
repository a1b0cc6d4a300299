#include "ctsum/gosper.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ctsum {
namespace {

// Solves M v = rhs over the rationals (M is rows x cols, row-major) and
// returns one solution with free variables set to zero.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                                  std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational inv = m[row][col].reciprocal();
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[row][k];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

std::optional<int> max_bound(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

GosperForm gosper_petkovsek_form(const RationalFunction& r) {
  if (r.is_zero()) throw std::domain_error("Gosper form of a zero ratio");
  GosperForm f{r.numerator(), r.denominator(), Polynomial(1)};
  for (;;) {
    bool changed = false;
    for (int h : dispersion_set(f.a, f.b)) {
      if (h == 0) continue;  // r is reduced, so gcd(a, b) = 1 already
      const Polynomial g = poly_gcd(f.a, f.b.shift(h));
      if (g.degree() < 1) continue;
      f.a = poly_exact_div(f.a, g);
      f.b = poly_exact_div(f.b, g.shift(-h));
      for (int i = 1; i <= h; ++i) f.c *= g.shift(-i);
      changed = true;
    }
    if (!changed) break;
  }
  return f;
}

std::optional<int> gosper_degree_bound(const GosperForm& form) {
  const Polynomial bm1 = form.b.shift(-1);
  const Polynomial plus = form.a + bm1;
  const Polynomial minus = form.a - bm1;
  const int lp = plus.degree();
  const int lm = minus.degree();
  const int dc = form.c.degree();
  std::optional<int> bound;
  if (lp <= lm) {
    bound = dc - lm;
  } else {
    bound = dc - lp + 1;
    // the two leading contributions cancel when deg x equals this value
    const Rational cand = Rational(-2) * minus.coeff(lp - 1) / plus.leading();
    if (cand.is_integer() && cand.sign() >= 0 && cand.numerator().fits_sint_p()) {
      bound = max_bound(bound, static_cast<int>(cand.numerator().get_si()));
    }
  }
  if (*bound < 0) return std::nullopt;
  return bound;
}

std::optional<Certificate> gosper(const RationalFunction& r) {
  const GosperForm form = gosper_petkovsek_form(r);
  const auto bound = gosper_degree_bound(form);
  if (!bound) return std::nullopt;

  const Polynomial bm1 = form.b.shift(-1);
  const Polynomial step = Polynomial::linear_root(Rational(-1));  // j + 1
  const std::size_t cols = static_cast<std::size_t>(*bound) + 1;
  std::vector<Polynomial> columns;
  columns.reserve(cols);
  Polynomial basis(1);
  Polynomial basis_shifted(1);
  int rows = form.c.degree() + 1;
  for (std::size_t i = 0; i < cols; ++i) {
    columns.push_back(form.a * basis_shifted - bm1 * basis);
    rows = std::max(rows, columns.back().degree() + 1);
    basis *= Polynomial::identity();
    basis_shifted *= step;
  }
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(cols));
  std::vector<Rational> rhs(static_cast<std::size_t>(rows));
  for (int d = 0; d < rows; ++d) {
    for (std::size_t i = 0; i < cols; ++i) m[static_cast<std::size_t>(d)][i] = columns[i].coeff(d);
    rhs[static_cast<std::size_t>(d)] = form.c.coeff(d);
  }
  const auto solution = solve_linear(std::move(m), std::move(rhs), cols);
  if (!solution) return std::nullopt;
  const Polynomial x(*solution);
  return Certificate{RationalFunction::reduce(bm1 * x, form.c)};
}

bool verify_certificate(const RationalFunction& r, const RationalFunction& R) {
  return r * R.shift(1) - R == RationalFunction(1);
}

}  // namespace ctsum
