#include "ctsum/catalog.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "ctsum/combinatorics.hpp"

namespace ctsum {
namespace {

Rational fact(int m) { return Rational(factorial(m)); }

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// 2j + offset
Polynomial linear_j(int offset) { return Polynomial(std::vector<Rational>{offset, 2}); }

Rational sum_base(int n, int k_first, const std::function<Rational(int)>& x) {
  Rational s;
  for (int k = k_first; k <= n; ++k) s += base_weight(n, k) * x(k);
  return s;
}

// sum_{k=1..n-1} (2k+1)! (3k+2) / ((k+1)! (k+2)! k)
Rational id7_tail(int n) {
  Rational s;
  for (int k = 1; k <= n - 1; ++k) s += fact(2 * k + 1) * Rational(3 * k + 2) / (fact(k + 1) * fact(k + 2) * Rational(k));
  return s;
}

// Pole parts at k = k_first..k_last with coefficient base_weight * w(k), plus
// one extra simple pole, dropping parts whose coefficient vanishes.
Decomposition simple_decomposition(int n, int k_first, int k_last, const std::function<Rational(int)>& w,
                                   const Rational& extra_pole, const Rational& extra_coeff,
                                   const Polynomial& poly = Polynomial()) {
  Decomposition d;
  d.polynomial_part = poly;
  for (int k = k_first; k <= k_last; ++k) {
    const Rational c = base_weight(n, k) * w(k);
    if (!c.is_zero()) d.parts.push_back({{Rational(k), 1}, {c}});
  }
  if (!extra_coeff.is_zero()) d.parts.push_back({{extra_pole, 1}, {extra_coeff}});
  return d;
}

int need_j(std::optional<int> j) {
  if (!j) throw std::invalid_argument("this identity's family needs j");
  return *j;
}

TermKernel mk(const Rational& c, std::initializer_list<int> up, std::initializer_list<int> down,
              Polynomial poly = Polynomial(1)) {
  return TermKernel::make(c, up, down, std::move(poly));
}

// 1/(j+1) = j!/(j+1)!
TermKernel reciprocal_j1(const Rational& c) { return mk(c, {0}, {1}); }

WzRelation forward_difference(int) { return {1, -1, 0}; }

std::array<IdentityRecord, 8> build_records() {
  std::array<IdentityRecord, 8> r;

  // 1: sum C C (-1)^(n-k) = 1
  r[0].id = 1;
  r[0].lhs_weight = "1";
  r[0].rhs_text = "1";
  r[0].weight = [](int, int) { return Rational(1); };
  r[0].rhs = [](int) { return Rational(1); };
  r[0].expected_decomposition = [](int n, std::optional<int>) {
    return simple_decomposition(n, 0, n, [](int) { return Rational(1); }, 0, 0);
  };

  // 2: weight 1/(n+k)^2
  r[1].id = 2;
  r[1].domain = 1;
  r[1].lhs_weight = "1/(n+k)^2";
  r[1].rhs_text = "-(n-1)!^2/(2n)!";
  r[1].weight = [](int n, int k) { return Rational(1, static_cast<long>(n + k) * (n + k)); };
  r[1].rhs = [](int n) { return -fact(n - 1) * fact(n - 1) / fact(2 * n); };
  r[1].expected_decomposition = [](int n, std::optional<int>) {
    return simple_decomposition(
        n, 0, n, [n](int k) { return Rational(1, static_cast<long>(n + k) * (n + k)); }, Rational(-n),
        fact(n - 1) * fact(n - 1) / fact(2 * n));
  };

  // 3: weight H_k
  r[2].id = 3;
  r[2].k_first = 1;
  r[2].lhs_weight = "H_k";
  r[2].rhs_text = "2 H_n";
  r[2].weight = [](int, int k) { return harmonic(k); };
  r[2].rhs = [](int n) { return Rational(2) * harmonic(n); };
  r[2].summand_weight = [](int, int k, int j) { return Rational(k, static_cast<long>(j) * (j + k)); };
  r[2].summand_closed = [](int n, int j) {
    return Rational(1, j) - fact(j - 1) * fact(j - 1) * recip_factorial(j - n - 1) / fact(n + j);
  };
  r[2].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    return simple_decomposition(
        n, 1, n, [j](int k) { return Rational(k, static_cast<long>(j) * (j + k)); }, Rational(-j),
        fact(j - 1) * fact(j - 1) * recip_factorial(j - n - 1) / fact(n + j));
  };
  r[2].fg = FgPair{
      [](int n) { return TermSum{reciprocal_j1(1), mk(-1, {0, 0}, {-n, n + 1})}; },
      [](int n) { return TermSum{mk(Rational(2, n + 1), {0, 0}, {-n - 1, n + 1})}; },
      forward_difference};
  r[2].recurrence = RecurrenceData{
      {[](int) { return Rational(1); }, [](int) { return Rational(-1); }, [](int n) { return Rational(2, n + 1); }},
      0,
      [] { return Rational(0); }};

  // 4: weight H_{n+k}, k from 0
  r[3].id = 4;
  r[3].lhs_weight = "H_{n+k}";
  r[3].rhs_text = "2 H_n";
  r[3].weight = [](int n, int k) { return harmonic(n + k); };
  r[3].rhs = [](int n) { return Rational(2) * harmonic(n); };
  r[3].summand_weight = [](int n, int k, int j) { return Rational(n + k, static_cast<long>(j) * (j + n + k)); };
  r[3].summand_closed = [](int n, int j) {
    return Rational(1, j) - fact(n + j - 1) * fact(n + j - 1) / (fact(j - 1) * fact(2 * n + j));
  };
  r[3].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    return simple_decomposition(
        n, 0, n, [n, j](int k) { return Rational(n + k, static_cast<long>(j) * (j + n + k)); }, Rational(-j - n),
        fact(n + j - 1) * fact(n + j - 1) / (fact(j - 1) * fact(2 * n + j)));
  };
  r[3].fg = FgPair{
      [](int n) { return TermSum{reciprocal_j1(1), mk(-1, {n, n}, {0, 2 * n + 1})}; },
      [](int n) { return TermSum{mk(Rational(1, n + 1), {n, n}, {-1, 2 * n + 2}, linear_j(3 * n + 3))}; },
      forward_difference};
  r[3].recurrence = r[2].recurrence;

  // 5: weight k H_k
  r[4].id = 5;
  r[4].k_first = 1;
  r[4].lhs_weight = "k H_k";
  r[4].rhs_text = "n(n+1)(2 H_n - 1)";
  r[4].weight = [](int, int k) { return Rational(k) * harmonic(k); };
  r[4].rhs = [](int n) { return Rational(static_cast<long>(n) * (n + 1)) * (Rational(2) * harmonic(n) - 1); };
  r[4].summand_weight = [](int, int k, int j) { return Rational(static_cast<long>(k) * k, static_cast<long>(j) * (j + k)); };
  r[4].summand_closed = [](int n, int j) {
    return Rational(static_cast<long>(n) * (n + 1), j) - 1 +
           fact(j - 1) * fact(j) * recip_factorial(j - n - 1) / fact(n + j);
  };
  r[4].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    return simple_decomposition(
        n, 1, n, [j](int k) { return Rational(static_cast<long>(k) * k, static_cast<long>(j) * (j + k)); },
        Rational(-j), -fact(j - 1) * fact(j) * recip_factorial(j - n - 1) / fact(n + j), Polynomial(Rational(1, j)));
  };
  r[4].fg = FgPair{
      [](int n) {
        return TermSum{reciprocal_j1(static_cast<long>(n) * (n + 1)), mk(-1, {}, {}), mk(1, {0, 1}, {-n, n + 1})};
      },
      [](int n) { return TermSum{mk(2, {0, 1}, {-n - 1, n + 1})}; },
      [](int n) { return WzRelation{-n, n + 2, -2}; }};
  r[4].recurrence = RecurrenceData{
      {[](int n) { return Rational(-n); }, [](int n) { return Rational(n + 2); },
       [](int n) { return Rational(-2L * n * (n + 2)); }},
      1,
      [] { return lhs(5, 1); }};

  // 6: weight k H_{n+k}
  r[5].id = 6;
  r[5].k_first = 1;
  r[5].lhs_weight = "k H_{n+k}";
  r[5].rhs_text = "2n(n+1) H_n - n^2";
  r[5].weight = [](int n, int k) { return Rational(k) * harmonic(n + k); };
  r[5].rhs = [](int n) {
    return Rational(2L * n * (n + 1)) * harmonic(n) - Rational(static_cast<long>(n) * n);
  };
  r[5].summand_weight = [](int n, int k, int j) {
    return Rational(static_cast<long>(k) * (n + k), static_cast<long>(j) * (j + n + k));
  };
  r[5].summand_closed = [](int n, int j) {
    return Rational(static_cast<long>(n) * (n + 1), j) - 1 +
           fact(n + j - 1) * fact(n + j) / (fact(j - 1) * fact(2 * n + j));
  };
  r[5].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    return simple_decomposition(
        n, 1, n,
        [n, j](int k) { return Rational(static_cast<long>(k) * (n + k), static_cast<long>(j) * (j + n + k)); },
        Rational(-j - n), -fact(n + j - 1) * fact(n + j) / (fact(j - 1) * fact(2 * n + j)),
        Polynomial(Rational(1, j)));
  };
  r[5].fg = FgPair{
      [](int n) {
        return TermSum{reciprocal_j1(static_cast<long>(n) * (n + 1)), mk(-1, {}, {}),
                       mk(1, {n, n + 1}, {0, 2 * n + 1})};
      },
      [](int n) { return TermSum{mk(1, {n, n + 1}, {-1, 2 * n + 2}, linear_j(3 * n + 4))}; },
      [](int n) { return WzRelation{-n, n + 2, -2}; }};
  r[5].recurrence = RecurrenceData{
      {[](int n) { return Rational(-n); }, [](int n) { return Rational(n + 2); },
       [](int n) { return Rational(-static_cast<long>(n) * (2 * n + 3)); }},
      1,
      [] { return lhs(6, 1); }};

  // 7: weight k H_{n-k}
  r[6].id = 7;
  r[6].domain = 1;
  r[6].k_first = 1;
  r[6].lhs_weight = "k H_{n-k}";
  r[6].rhs_text = "2n(n+1) H_n - (n+1)^2 - n(n+1) sum_{k=1}^{n-1} (2k+1)!(3k+2)/((k+1)!(k+2)! k)";
  r[6].weight = [](int n, int k) { return Rational(k) * harmonic(n - k); };
  r[6].rhs = [](int n) {
    const Rational nn1(static_cast<long>(n) * (n + 1));
    return Rational(2) * nn1 * harmonic(n) - Rational(static_cast<long>(n + 1) * (n + 1)) - nn1 * id7_tail(n);
  };
  r[6].summand_weight = [](int n, int k, int j) {
    return Rational(static_cast<long>(k) * (n - k), static_cast<long>(j) * (j + n - k));
  };
  r[6].summand_closed = [](int n, int j) {
    return Rational(static_cast<long>(n) * (n + 1), j) + 1 -
           fact(2 * n + j) * fact(j - 1) / (fact(n + j - 1) * fact(n + j));
  };
  r[6].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    // The pole at z = n+j carries +c on 1/(z-(n+j)), i.e. -c on 1/(j+n-z).
    return simple_decomposition(
        n, 1, n - 1,
        [n, j](int k) { return Rational(static_cast<long>(k) * (n - k), static_cast<long>(j) * (j + n - k)); },
        Rational(n + j), fact(2 * n + j) * fact(j - 1) / (fact(n + j - 1) * fact(n + j)),
        Polynomial(Rational(1, j)));
  };
  r[6].fg = FgPair{
      [](int n) {
        return TermSum{reciprocal_j1(static_cast<long>(n) * (n + 1)), mk(1, {}, {}),
                       mk(-1, {2 * n + 1, 0}, {n, n + 1})};
      },
      [](int n) { return TermSum{mk(-1, {2 * n + 1, 0}, {n, n + 1}, linear_j(3 * n + 2))}; },
      [](int n) { return WzRelation{-n, n + 2, 2}; }};
  r[6].recurrence = RecurrenceData{
      {[](int n) { return Rational(-n); }, [](int n) { return Rational(n + 2); },
       [](int n) {
         return Rational(-static_cast<long>(n + 2) * (2 * n + 1)) +
                fact(2 * n + 1) / (fact(n) * fact(n + 1)) * Rational(3 * n + 2);
       }},
      1,
      [] { return lhs(7, 1); }};

  // 8: weight H_k^(2)
  r[7].id = 8;
  r[7].k_first = 1;
  r[7].lhs_weight = "H_k^(2)";
  r[7].rhs_text = "2 sum_{k=1}^n (-1)^(k-1)/k^2";
  r[7].weight = [](int, int k) { return harmonic(k, 2); };
  r[7].rhs = [](int n) { return Rational(2) * alt_harmonic2(n); };
  r[7].summand_weight = [](int, int k, int j) {
    const long jk = static_cast<long>(j) + k;
    return Rational(static_cast<long>(k) * (k + 2L * j), static_cast<long>(j) * j * jk * jk);
  };
  r[7].summand_closed = [](int, int j) { return Rational(1, static_cast<long>(j) * j); };
  r[7].summand_boundary = [](int n, int j) { return -id8_boundary_jet(n, j).d; };
  r[7].expected_decomposition = [](int n, std::optional<int> jo) {
    const int j = need_j(jo);
    Decomposition d = simple_decomposition(
        n, 1, n,
        [j](int k) {
          const long jk = static_cast<long>(j) + k;
          return Rational(static_cast<long>(k) * (k + 2L * j), static_cast<long>(j) * j * jk * jk);
        },
        0, 0);
    const Rational c2 = fact(j - 1) * fact(j - 1) / (fact(n + j) * fact(j - n - 1));
    const Rational hcomb = harmonic(j + n) + harmonic(j - n - 1) - Rational(2) * harmonic(j - 1);
    d.parts.push_back({{Rational(-j), 2}, {c2, c2 * hcomb}});
    return d;
  };
  r[7].dual = DualPair{
      [](int n) {
        DualTermSum f;
        f.terms.push_back({mk(1, {0, 0}, {1, 1}), false, true});  // x/(j+1)^2
        f.terms.push_back({mk(1, {0, 0}, {n + 1, -n}), true, false});
        return f;
      },
      [](int n) {
        DualTermSum g;
        g.terms.push_back({mk(2, {0, 0}, {n + 1, -n - 1}), true, false});
        return g;
      }};
  r[7].recurrence = RecurrenceData{
      {[](int) { return Rational(1); }, [](int) { return Rational(-1); },
       [](int n) { return sign_pow(n) * Rational(2, static_cast<long>(n + 1) * (n + 1)); }},
      0,
      [] { return Rational(0); }};

  return r;
}

void check_domain(const IdentityRecord& rec, int n) {
  if (n < rec.domain) {
    throw std::domain_error("identity " + std::to_string(rec.id) + " needs n >= " + std::to_string(rec.domain) +
                            ", got " + std::to_string(n));
  }
}

}  // namespace

const IdentityRecord& identity(int id) {
  static const std::array<IdentityRecord, 8> records = build_records();
  if (id < 1 || id > 8) throw std::invalid_argument("unknown identity id " + std::to_string(id));
  return records[static_cast<std::size_t>(id - 1)];
}

Rational base_weight(int n, int k) {
  return Rational(binomial(n, k) * binomial(n + k, k)) * sign_pow(n - k);
}

Rational lhs(int id, int n) {
  const IdentityRecord& rec = identity(id);
  check_domain(rec, n);
  return sum_base(n, rec.k_first, [&](int k) { return rec.weight(n, k); });
}

Rational rhs(int id, int n) {
  const IdentityRecord& rec = identity(id);
  check_domain(rec, n);
  return rec.rhs(n);
}

Rational rhs_alt7(int n) {
  if (n < 1) throw std::domain_error("rhs_alt7 needs n >= 1");
  const Rational nn1(static_cast<long>(n) * (n + 1));
  Rational tail;
  for (int k = 1; k <= n; ++k) tail += fact(2 * k) / (fact(k) * fact(k + 1));
  return Rational(2) * nn1 * harmonic(n) - Rational(static_cast<long>(n + 1) * (n + 1)) +
         Rational(2 * n + 1) * Rational(binomial(2 * n, n)) - Rational(3, 2) * nn1 * tail;
}

SummandSides summand_sides(int id, int n, int j) {
  const IdentityRecord& rec = identity(id);
  if (!rec.summand_weight) throw std::invalid_argument("identity " + std::to_string(id) + " has no j-level form");
  if (n < 1 || j < 1) throw std::domain_error("summand identity needs n >= 1 and j >= 1");
  Rational left = sum_base(n, rec.k_first, [&](int k) { return rec.summand_weight(n, k, j); });
  if (rec.summand_boundary) left += rec.summand_boundary(n, j);
  return {left, rec.summand_closed(n, j)};
}

bool summand_check(int id, int n, int j) {
  const SummandSides s = summand_sides(id, n, j);
  if (s.left != s.right) return false;
  if (id == 8 && j >= n + 1) {
    // Both forms of the boundary coefficient must agree where the H form exists.
    const Rational c = fact(j - 1) * fact(j - 1) / (fact(n + j) * fact(j - n - 1));
    const Rational hcomb = harmonic(j + n) + harmonic(j - n - 1) - Rational(2) * harmonic(j - 1);
    return c * hcomb == identity(8).summand_boundary(n, j);
  }
  return true;
}

GammaDual id8_boundary_jet(int n, int j) {
  const DualKernel k{mk(1, {-1, -1}, {n, -1 - n}), true, false};
  const GammaDual g = kernel_eval_dual(k, j);
  if (!g.is_gamma_free()) throw GammaContamination("identity 8 boundary kernel keeps a gamma term");
  return g;
}

bool certificate_check(int id, int n) {
  const IdentityRecord& rec = identity(id);
  if (!rec.fg) throw std::invalid_argument("identity " + std::to_string(id) + " has no F/G pair");
  return wz_verify(rec.fg->F, rec.fg->G, rec.fg->relation(n), n);
}

bool recurrence_check(int id, int n) {
  const IdentityRecord& rec = identity(id);
  if (!rec.recurrence) throw std::invalid_argument("identity " + std::to_string(id) + " has no recurrence");
  const RecurrenceSpec& spec = rec.recurrence->spec;
  if (n < rec.recurrence->first) throw std::domain_error("recurrence check below the initial index");

  const Rational direct = spec.alpha(n) * lhs(id, n + 1) + spec.beta(n) * lhs(id, n);
  if (direct != spec.rhs(n)) return false;

  if (rec.fg) {
    const WzRelation rel = rec.fg->relation(n);
    if (rel.alpha != spec.alpha(n) || rel.beta != spec.beta(n)) return false;
    const TermSum g = rec.fg->G(n);
    const Asymptotics a = kernel_asymptotics(g);
    // sum_{j<J} (dG + gamma) = G(J) + gamma J - G(0) must converge
    if (a.slope + rel.gamma != 0) return false;
    return a.limit_constant - kernel_eval(g, 0) == spec.rhs(n);
  }

  // id 8: (n+1)(S(n+1) - S(n)) = sigma (lim G(n, J) - G(n, 0)), lim G = 2
  // independently of x, so T(n+1) - T(n) = -sigma d[G(n, 0)] / (n+1).
  const int sigma = determine_dual_sigma(rec.dual->F, rec.dual->G);
  const DualTermSum g = rec.dual->G(n);
  TermSum plain;
  for (const auto& t : g.terms) plain.terms.push_back(t.kernel);
  const Asymptotics a = kernel_asymptotics(plain);
  if (a.slope != 0 || a.limit_constant != 2) return false;
  const GammaDual g0 = kernel_eval_dual(g, 0);
  if (!g0.is_gamma_free()) throw GammaContamination("G(n, 0) keeps a gamma term");
  return Rational(-sigma) * g0.d / Rational(n + 1) == spec.rhs(n);
}

}  // namespace ctsum
