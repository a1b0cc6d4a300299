#include "ctsum/wz.hpp"

#include <sstream>

namespace ctsum {
namespace {

GammaDual checked(const GammaDual& g, const char* what, int n, int j) {
  if (!g.is_gamma_free()) {
    std::ostringstream os;
    os << what << " at n=" << n << ", j=" << j << " is not gamma-free: " << g;
    throw GammaContamination(os.str());
  }
  return g;
}

}  // namespace

RationalFunction wz_difference(const KernelFamily& F, const WzRelation& rel, int n) {
  const TermSum next = F(n + 1);
  const TermSum here = F(n);
  if (!next.balanced() || !here.balanced()) throw std::invalid_argument("unbalanced F kernel");
  return kernel_to_rf(next) * RationalFunction(rel.alpha) + kernel_to_rf(here) * RationalFunction(rel.beta) -
         RationalFunction(rel.gamma);
}

RationalFunction wz_residual(const KernelFamily& F, const KernelFamily& G, const WzRelation& rel, int n) {
  const TermSum g = G(n);
  if (!g.balanced()) throw std::invalid_argument("unbalanced G kernel");
  const RationalFunction grf = kernel_to_rf(g);
  return wz_difference(F, rel, n) - (grf.shift(1) - grf);
}

bool wz_verify(const KernelFamily& F, const KernelFamily& G, const WzRelation& rel, int n) {
  return wz_residual(F, G, rel, n).is_zero();
}

DualSides wz_dual_sides(const DualFamily& F, const DualFamily& G, int n, int j, int sigma) {
  const Rational w(n + 1);
  const GammaDual f_here = checked(kernel_eval_dual(F(n), j), "F(n,j)", n, j);
  const GammaDual f_next = checked(kernel_eval_dual(F(n + 1), j), "F(n+1,j)", n, j);
  const DualTermSum g = G(n);
  const GammaDual g_next = checked(kernel_eval_dual(g, j + 1), "G(n,j+1)", n, j);
  const GammaDual g_here = checked(kernel_eval_dual(g, j), "G(n,j)", n, j);
  DualSides s{w * (f_next - f_here), Rational(sigma) * (g_next - g_here)};
  checked(s.lhs - s.rhs, "relation", n, j);
  return s;
}

bool wz_verify_dual(const DualFamily& F, const DualFamily& G, int n, int j, int sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
  const DualSides s = wz_dual_sides(F, G, n, j, sigma);
  return s.lhs == s.rhs;
}

int determine_dual_sigma(const DualFamily& F, const DualFamily& G) {
  for (int sigma : {1, -1}) {
    if (wz_verify_dual(F, G, 0, 0, sigma)) return sigma;
  }
  throw std::runtime_error("neither orientation satisfies the dual relation at (0, 0)");
}

}  // namespace ctsum
