#pragma once

#include "ctsum/rational.hpp"

namespace ctsum {

/// m! for m >= 0. Throws std::domain_error for negative m.
Integer factorial(int m);

/// 1/m!, with the reciprocal-Gamma convention 1/m! = 0 for every negative m.
Rational recip_factorial(int m);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(int n, int k);

/// H_n^{(m)} = sum_{i=1..n} 1/i^m. H_0^{(m)} = 0.
Rational harmonic(int n, int m = 1);

/// sum_{k=1..n} (-1)^{k-1} / k^2.
Rational alt_harmonic2(int n);

}  // namespace ctsum
