#pragma once

#include <functional>
#include <stdexcept>

#include "ctsum/kernel.hpp"

namespace ctsum {

/// alpha * F(n+1, j) + beta * F(n, j) = G(n, j+1) - G(n, j) + gamma.
struct WzRelation {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

using KernelFamily = std::function<TermSum(int n)>;
using DualFamily = std::function<DualTermSum(int n)>;

/// alpha F(n+1) + beta F(n) - gamma, as a rational function of j.
RationalFunction wz_difference(const KernelFamily& F, const WzRelation& rel, int n);

/// Left side minus right side of the relation; zero iff it holds.
RationalFunction wz_residual(const KernelFamily& F, const KernelFamily& G, const WzRelation& rel, int n);

/// The relation as an identity of rational functions in j. Since every
/// catalog kernel agrees with its rational form at each integer j >= 0, this
/// also proves it pointwise under the reciprocal-factorial convention.
bool wz_verify(const KernelFamily& F, const KernelFamily& G, const WzRelation& rel, int n);

/// Raised when a gamma-dual evaluation keeps a term in Euler's gamma.
class GammaContamination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both sides of -(n+1)F(n,j) + (n+1)F(n+1,j) = sigma [G(n,j+1) - G(n,j)].
struct DualSides {
  GammaDual lhs;
  GammaDual rhs;
};

DualSides wz_dual_sides(const DualFamily& F, const DualFamily& G, int n, int j, int sigma);

/// The dual relation at (n, j) in all three jet slots. Throws
/// GammaContamination if any evaluated piece carries a gamma term, which is
/// distinct from the relation simply failing.
bool wz_verify_dual(const DualFamily& F, const DualFamily& G, int n, int j, int sigma);

/// The orientation sigma in {+1, -1} that satisfies the dual relation at
/// (n, j) = (0, 0); throws std::runtime_error if neither does.
int determine_dual_sigma(const DualFamily& F, const DualFamily& G);

}  // namespace ctsum
