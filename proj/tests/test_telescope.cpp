#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ctsum/catalog.hpp"
#include "ctsum/combinatorics.hpp"
#include "ctsum/gosper.hpp"
#include "ctsum/kernel.hpp"
#include "ctsum/recurrence.hpp"
#include "ctsum/wz.hpp"
#include "oracles.hpp"

using namespace ctsum;

namespace {

const Polynomial j = Polynomial::identity();

Polynomial poly(std::vector<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

RationalFunction rf(const Polynomial& n, const Polynomial& d) { return rf_reduce(n, d); }

// j!^2 / ((j-2)! (j+2)!), the n = 1 instance of identity 3's G without its constant.
TermKernel g3() { return TermKernel::make(1, {0, 0}, {-2, 2}); }

// (a+x)!/(b+x)! as a rational function of x; valid for any integers a, b.
RationalFunction shifted_quotient(int a, int b) {
  Polynomial p(1);
  for (int i = std::min(a, b) + 1; i <= std::max(a, b); ++i) p *= Polynomial(std::vector<Rational>{i, 1});
  return a >= b ? RationalFunction(p) : rf(Polynomial(1), p);
}

struct Jet {
  Rational value;
  Rational d;
};

Jet jet_at_zero(const RationalFunction& r) {
  const Polynomial& n = r.numerator();
  const Polynomial& d = r.denominator();
  const Rational d0 = d.eval(0);
  return {n.eval(0) / d0, (n.derivative().eval(0) * d0 - n.eval(0) * d.derivative().eval(0)) / (d0 * d0)};
}

// Identity 8's F and G at fixed (n, j) as rational functions of the parameter x.
RationalFunction oracle_F8(int n, int jj) {
  const RationalFunction x(Polynomial::identity());
  const RationalFunction plain = RationalFunction(Rational(1, (jj + 1) * (jj + 1)));
  return x * plain + shifted_quotient(jj, n + 1 + jj) * shifted_quotient(jj, jj - n);
}

RationalFunction oracle_G8(int n, int jj) {
  return RationalFunction(2) * shifted_quotient(jj, n + 1 + jj) * shifted_quotient(jj, jj - n - 1);
}

bool oracle_dual_holds(int n, int jj, int sigma) {
  const RationalFunction lhs = RationalFunction(n + 1) * (oracle_F8(n + 1, jj) - oracle_F8(n, jj));
  const RationalFunction rhs = RationalFunction(sigma) * (oracle_G8(n, jj + 1) - oracle_G8(n, jj));
  const Jet a = jet_at_zero(lhs);
  const Jet b = jet_at_zero(rhs);
  return a.value == b.value && a.d == b.d;
}

}  // namespace

TEST_CASE("kernel_eval examples") {
  CHECK(kernel_eval(g3(), 2) == Rational(1, 6));
  CHECK(kernel_eval(g3(), 1) == Rational(0));
  CHECK(kernel_eval(g3(), 3) == Rational(3, 10));
  CHECK(kernel_eval(g3(), 0) == Rational(0));
  CHECK_THROWS_AS(kernel_eval(g3(), -1), std::domain_error);
  CHECK_THROWS_AS(kernel_eval(TermKernel::make(1, {-3}, {0}), 1), std::domain_error);
  const TermSum s{TermKernel::make(1, {0}, {1}), g3()};
  CHECK(kernel_eval(s, 2) == Rational(1, 3) + Rational(1, 6));
}

TEST_CASE("kernel_to_rf examples") {
  CHECK(kernel_to_rf(g3()) == rf(poly({0, -1, 1}), poly({2, 3, 1})));
  CHECK(kernel_to_rf(TermKernel::make(1, {0, 0}, {-1, 1})) == rf(j, poly({1, 1})));
  CHECK_THROWS_AS(kernel_to_rf(TermKernel::make(1, {0}, {})), std::invalid_argument);
  CHECK_FALSE(TermKernel::make(1, {0}, {}).balanced());
  CHECK(TermKernel::make(3, {}, {}, j).balanced());
  CHECK(kernel_to_rf(TermKernel::make(3, {}, {}, j)) == RationalFunction(j * Rational(3)));
}

TEST_CASE("kernel_ratio examples") {
  CHECK(kernel_ratio(rf(Polynomial(1), poly({0, 1, 1}))) == rf(j, poly({2, 1})));
  CHECK(kernel_ratio(TermKernel::make(1, {0}, {}, j)) == rf(poly({1, 2, 1}), j));
  CHECK(kernel_ratio(RationalFunction(5)) == RationalFunction(1));
  CHECK_THROWS(kernel_ratio(RationalFunction(0)));
}

TEST_CASE("gosper examples") {
  const auto c1 = gosper(rf(j, poly({2, 1})));
  REQUIRE(c1.has_value());
  CHECK(c1->R == RationalFunction(poly({-1, -1})));
  const auto c2 = gosper(rf(poly({1, 2, 1}), j));
  REQUIRE(c2.has_value());
  CHECK(c2->R == rf(Polynomial(1), j));
  CHECK_FALSE(gosper(rf(j, poly({1, 1}))).has_value());
  CHECK_THROWS(gosper(RationalFunction(0)));
}

TEST_CASE("gosper_petkovsek_form reconstructs the ratio") {
  const std::vector<RationalFunction> ratios{
      rf(j, poly({2, 1})), rf(poly({1, 2, 1}), j), rf(j, poly({1, 1})),
      rf(poly({3, 1}) * poly({-1, 2}), poly({5, 1}) * poly({1, 1})), rf(poly({0, 0, 1}), poly({4, 4, 1}))};
  for (const auto& r : ratios) {
    const GosperForm f = gosper_petkovsek_form(r);
    CHECK(rf(f.a * poly_shift(f.c, 1), f.b * f.c) == r);
    for (int h = 0; h <= 12; ++h) CHECK(poly_gcd(f.a, poly_shift(f.b, h)).degree() == 0);
  }
}

TEST_CASE("verify_certificate examples") {
  CHECK(verify_certificate(rf(j, poly({2, 1})), RationalFunction(poly({-1, -1}))));
  CHECK_FALSE(verify_certificate(rf(j, poly({2, 1})), RationalFunction(-j)));
  CHECK(verify_certificate(rf(poly({1, 2, 1}), j), rf(Polynomial(1), j)));
}

TEST_CASE("gosper soundness on random rational ratios") {
  int summable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    // t(j) = p(j) * prod (j+a_i)!/(j+b_i)! style ratios: products of shifted linear factors.
    Polynomial num(1);
    Polynomial den(1);
    const int m = static_cast<int>(oracle::uniform(1, 3));
    for (int i = 0; i < m; ++i) {
      num *= poly({oracle::uniform(-4, 6), 1});
      den *= poly({oracle::uniform(-4, 6), 1});
    }
    const RationalFunction r = rf(num * Rational(oracle::uniform(1, 3)), den);
    const auto cert = gosper(r);
    if (cert) {
      ++summable;
      CHECK(verify_certificate(r, cert->R));
    }
  }
  CHECK(summable > 0);
}

TEST_CASE("wz_verify examples") {
  const FgPair& p3 = *identity(3).fg;
  CHECK(wz_verify(p3.F, p3.G, {1, -1, 0}, 1));
  CHECK(kernel_eval(p3.F(2), 2) - kernel_eval(p3.F(1), 2) == Rational(2, 15));
  CHECK(kernel_eval(p3.G(1), 3) - kernel_eval(p3.G(1), 2) == Rational(2, 15));
  CHECK(kernel_eval(p3.F(2), 2) == Rational(3, 10));
  CHECK(kernel_eval(p3.F(1), 2) == Rational(1, 6));
  CHECK_FALSE(wz_verify(p3.F, p3.G, {1, -1, 1}, 1));

  const FgPair& p5 = *identity(5).fg;
  CHECK(wz_verify(p5.F, p5.G, {-1, 3, -2}, 1));
  CHECK_FALSE(wz_verify(p5.F, p5.G, {-1, 3, 2}, 1));
}

TEST_CASE("wz_verify and telescoping for the stored pairs") {
  for (int id = 3; id <= 7; ++id) {
    const FgPair& p = *identity(id).fg;
    for (int n = 1; n <= 20; ++n) CHECK(wz_verify(p.F, p.G, p.relation(n), n));
    for (int n = 1; n <= 15; ++n) {
      const WzRelation rel = p.relation(n);
      Rational sum;
      for (int jj = 0; jj <= 40; ++jj) {
        sum += rel.alpha * kernel_eval(p.F(n + 1), jj) + rel.beta * kernel_eval(p.F(n), jj) - rel.gamma;
      }
      CAPTURE(id);
      CAPTURE(n);
      CHECK(sum == kernel_eval(p.G(n), 41) - kernel_eval(p.G(n), 0));
    }
  }
}

TEST_CASE("kernel_eval agrees with the rational form on catalog kernels") {
  for (int id = 3; id <= 7; ++id) {
    const FgPair& p = *identity(id).fg;
    for (int n = 1; n <= 8; ++n) {
      for (const TermSum& t : {p.F(n), p.G(n)}) {
        REQUIRE(t.balanced());
        const RationalFunction r = kernel_to_rf(t);
        for (int jj = 0; jj <= 30; ++jj) CHECK(kernel_eval(t, jj) == rf_eval(r, jj));
      }
    }
  }
}

TEST_CASE("gosper on the per-n differences recovers G up to a constant") {
  for (int id = 3; id <= 7; ++id) {
    const FgPair& p = *identity(id).fg;
    for (int n = 1; n <= 10; ++n) {
      const RationalFunction h = wz_difference(p.F, p.relation(n), n);
      const RationalFunction r = kernel_ratio(h);
      const auto cert = gosper(r);
      REQUIRE(cert.has_value());
      CHECK(verify_certificate(r, cert->R));
      const RationalFunction T = cert->R * h;
      CHECK(T.shift(1) - T == h);
      const RationalFunction offset = T - kernel_to_rf(p.G(n));
      CHECK(offset.numerator().degree() <= 0);
      CHECK(offset.denominator() == Polynomial(1));
    }
  }
}

TEST_CASE("kernel_asymptotics examples") {
  const Asymptotics a3 = kernel_asymptotics(identity(3).fg->G(1));
  CHECK(a3.slope == Rational(0));
  CHECK(a3.limit_constant == Rational(1));
  const Asymptotics a5 = kernel_asymptotics(identity(5).fg->G(1));
  CHECK(a5.slope == Rational(2));
  CHECK(a5.limit_constant == Rational(-6));
  const Asymptotics c = kernel_asymptotics(TermSum(TermKernel::make(5, {}, {})));
  CHECK(c.slope == Rational(0));
  CHECK(c.limit_constant == Rational(5));
  CHECK_THROWS(kernel_asymptotics(TermSum(TermKernel::make(1, {0}, {}))));
  CHECK_THROWS(kernel_asymptotics(TermSum(TermKernel::make(1, {}, {}, j * j))));
}

TEST_CASE("dual kernel evaluation matches hand jets") {
  const DualPair& d = *identity(8).dual;
  const GammaDual f00 = kernel_eval_dual(d.F(0), 0);
  CHECK(f00 == GammaDual{1, 0, 0});
  const GammaDual f10 = kernel_eval_dual(d.F(1), 0);
  CHECK(f10 == GammaDual{0, Rational(3, 2), 0});
  const GammaDual g00 = kernel_eval_dual(d.G(0), 0);
  const GammaDual g01 = kernel_eval_dual(d.G(0), 1);
  CHECK(g01 - g00 == GammaDual{1, Rational(-3, 2), 0});
}

TEST_CASE("wz_verify_dual examples") {
  const DualPair& d = *identity(8).dual;
  CHECK(wz_verify_dual(d.F, d.G, 0, 0, -1));
  CHECK_FALSE(wz_verify_dual(d.F, d.G, 0, 0, 1));
  const int sigma = determine_dual_sigma(d.F, d.G);
  CHECK(sigma == -1);
  CHECK(wz_verify_dual(d.F, d.G, 1, 2, sigma));
  CHECK_THROWS_AS(wz_verify_dual(d.F, d.G, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("wz_verify_dual agrees with the rational-in-x oracle on the grid") {
  const DualPair& d = *identity(8).dual;
  for (int n = 0; n <= 10; ++n) {
    for (int jj = 0; jj <= 25; ++jj) {
      CAPTURE(n);
      CAPTURE(jj);
      CHECK(oracle_dual_holds(n, jj, -1));
      CHECK(wz_verify_dual(d.F, d.G, n, jj, -1));
      const DualSides s = wz_dual_sides(d.F, d.G, n, jj, -1);
      CHECK(s.lhs.is_gamma_free());
      CHECK(s.rhs.is_gamma_free());
    }
  }
}

TEST_CASE("gamma contamination is reported distinctly") {
  const DualFamily lone = [](int) {
    return DualTermSum{{DualKernel{TermKernel::make(1, {}, {0}), true, false}}};
  };
  CHECK_THROWS_AS(wz_verify_dual(lone, lone, 0, 1, 1), GammaContamination);
}

TEST_CASE("solve_recurrence examples") {
  const RecurrenceSpec& s3 = identity(3).recurrence->spec;
  const Sequence a = solve_recurrence(s3, 0, 0, 3);
  CHECK(a.at(3) == Rational(11, 3));
  CHECK(a.at(3) == Rational(2) * harmonic(3));
  const Sequence b = solve_recurrence(identity(5).recurrence->spec, 1, 2, 2);
  CHECK(b.at(2) == Rational(12));
  const Sequence c = solve_recurrence(identity(6).recurrence->spec, 1, 3, 1);
  CHECK(c.values == std::vector<Rational>{3});
  CHECK(c.last() == 1);
  CHECK_THROWS_AS(solve_recurrence(identity(5).recurrence->spec, 0, 0, 2), std::domain_error);
  CHECK_THROWS(a.at(7));
}
