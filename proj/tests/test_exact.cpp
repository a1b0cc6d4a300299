#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ctsum/combinatorics.hpp"
#include "ctsum/gamma_dual.hpp"
#include "oracles.hpp"

using namespace ctsum;

namespace {

Rational from(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

Rational random_rational() {
  long den = 0;
  while (den == 0) den = oracle::uniform(-40, 40);
  return Rational(oracle::uniform(-1000, 1000), den);
}

GammaDual random_dual() { return {random_rational(), random_rational(), random_rational()}; }

double to_double(const Rational& r) { return mpq_class(r.numerator(), r.denominator()).get_d(); }

}  // namespace

TEST_CASE("rational normal form") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK(Rational(7, 2).to_string() == "7/2");
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(3).to_fraction_string() == "3/1");
  CHECK(Rational(-7, 3).ceil() == -2);
  CHECK(Rational(7, 3).ceil() == 3);
}

TEST_CASE("field axioms on random rationals") {
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const Rational c = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
    CHECK(a.denominator() >= 1);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(oracle::factorial(10) == 3628800);
  CHECK(factorial(10) == 3628800);
  for (int m = 0; m <= 60; ++m) CHECK(factorial(m) == oracle::factorial(m));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("reciprocal factorial convention") {
  CHECK(recip_factorial(3) == Rational(1, 6));
  CHECK(recip_factorial(-1) == Rational(0));
  CHECK(recip_factorial(-4) == Rational(0));
  for (int m = 0; m <= 40; ++m) CHECK(recip_factorial(m) * Rational(factorial(m)) == Rational(1));
  for (int m = -40; m < 0; ++m) CHECK(recip_factorial(m).is_zero());
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(oracle::binomial(6, 3) == 20);
  CHECK(binomial(6, 3) == 20);
  for (int n = 0; n <= 30; ++n) {
    for (int k = -2; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0, 1) == Rational(0));
  CHECK(from(oracle::harmonic(3)) == Rational(11, 6));
  CHECK(harmonic(3, 1) == Rational(11, 6));
  CHECK(from(oracle::harmonic(2, 2)) == Rational(5, 4));
  CHECK(harmonic(2, 2) == Rational(5, 4));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 30; ++n) {
      CHECK(harmonic(n, m) - harmonic(n - 1, m) == Rational(n).pow(m).reciprocal());
    }
  }
  CHECK_THROWS_AS(harmonic(3, 0), std::domain_error);
}

TEST_CASE("alternating harmonic numbers of order two") {
  CHECK(alt_harmonic2(0) == Rational(0));
  CHECK(alt_harmonic2(1) == Rational(1));
  CHECK(alt_harmonic2(2) == Rational(3, 4));
  CHECK(alt_harmonic2(3) == Rational(3, 4) + Rational(1, 9));
}

TEST_CASE("gamma-dual reciprocal factorial examples") {
  CHECK(gdual_recip_factorial(0) == GammaDual{1, 0, 1});
  CHECK(gdual_recip_factorial(2) == GammaDual{Rational(1, 2), Rational(-3, 4), Rational(1, 2)});
  CHECK(gdual_recip_factorial(-2) == GammaDual{0, -1, 0});
  CHECK(gdual_recip_factorial(-1) == GammaDual{0, 1, 0});
  CHECK(gdual_recip_factorial(-3) == GammaDual{0, 2, 0});
  CHECK_THROWS_AS(gdual_factorial(-1), std::domain_error);
}

TEST_CASE("gamma-dual jets agree with finite differences of 1/Gamma") {
  const double euler_gamma = 0.57721566490153286;
  const double h = 1e-6;
  for (int m = -5; m <= 8; ++m) {
    const GammaDual g = gdual_recip_factorial(m);
    const double f0 = 1.0 / std::tgamma(1.0 + m);
    const double fd = (1.0 / std::tgamma(1.0 + m + h) - 1.0 / std::tgamma(1.0 + m - h)) / (2 * h);
    CAPTURE(m);
    if (m >= 0) CHECK(to_double(g.value) == doctest::Approx(f0).epsilon(1e-12));
    const double jet = to_double(g.d) + to_double(g.dgamma) * euler_gamma;
    CHECK(jet == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("gamma-dual consistency with exact combinatorics") {
  for (int m = 0; m <= 30; ++m) {
    const GammaDual g = gdual_recip_factorial(m);
    CHECK(g.value == recip_factorial(m));
    CHECK(g.d == -harmonic(m) * recip_factorial(m));
    CHECK(g.dgamma == recip_factorial(m));
    const GammaDual one = g * gdual_factorial(m);
    CHECK(one == GammaDual::constant(1));
  }
}

TEST_CASE("gamma-dual ring properties") {
  for (int trial = 0; trial < 300; ++trial) {
    const GammaDual a = random_dual();
    const GammaDual b = random_dual();
    const GammaDual c = random_dual();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).value == a.value * b.value);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.value.is_zero()) CHECK(a * a.reciprocal() == GammaDual::constant(1));
  }
  CHECK_THROWS_AS(GammaDual::variable().reciprocal(), std::domain_error);
}

TEST_CASE("balanced factorial quotients are gamma-free") {
  // (j+x)!^2 / ((j+2+x)! (j-1+x)!) for a range of j, including the zero of 1/(j-1+x)!.
  for (int j = 0; j <= 12; ++j) {
    const GammaDual q = gdual_factorial(j) * gdual_factorial(j) * gdual_recip_factorial(j + 2) *
                        gdual_recip_factorial(j - 1);
    CHECK(q.is_gamma_free());
  }
  // a lone 1/(m+x)! is not
  CHECK_FALSE(gdual_recip_factorial(3).is_gamma_free());
}
