#pragma once

#include <optional>

#include "ctsum/rational_function.hpp"

namespace ctsum {

/// Gosper certificate R for a term t with ratio r(j) = t(j+1)/t(j): the
/// antidifference is T(j) = R(j) t(j), and r(j) R(j+1) - R(j) = 1.
struct Certificate {
  RationalFunction R;
};

/// r(j) = (a(j)/b(j)) * (c(j+1)/c(j)) with gcd(a(j), b(j+h)) = 1 for all h >= 0.
struct GosperForm {
  Polynomial a;
  Polynomial b;
  Polynomial c;
};

GosperForm gosper_petkovsek_form(const RationalFunction& r);

/// Bound on deg x for a(j) x(j+1) - b(j-1) x(j) = c(j); nullopt when no
/// nonnegative degree is possible.
std::optional<int> gosper_degree_bound(const GosperForm& form);

/// Gosper's algorithm. Returns nullopt (not summable) when no polynomial
/// solution exists within the degree bound. Free parameters of the linear
/// system are set to zero, which fixes the antidifference up to an additive
/// constant. Throws for r == 0.
std::optional<Certificate> gosper(const RationalFunction& r);

/// r(j) R(j+1) - R(j) == 1 as rational functions.
bool verify_certificate(const RationalFunction& r, const RationalFunction& R);

}  // namespace ctsum
