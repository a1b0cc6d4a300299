#include "ctsum/verify.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "ctsum/catalog.hpp"
#include "ctsum/gosper.hpp"
#include "ctsum/partial_fractions.hpp"

namespace ctsum {
namespace {

using Params = std::vector<std::pair<std::string, ParamValue>>;

CheckOutcome compare(Params params, const Rational& lhs, const Rational& rhs) {
  CheckOutcome c{std::move(params), lhs == rhs, std::nullopt, {}};
  if (!c.pass) c.witness = Witness{lhs, rhs, std::nullopt};
  return c;
}

CheckOutcome failure(Params params, const std::exception& e) {
  return {std::move(params), false, Witness{0, 0, std::nullopt}, e.what()};
}

template <typename Fn>
CheckOutcome guarded(Params params, Fn&& fn) {
  try {
    return fn(params);
  } catch (const std::exception& e) {
    return failure(std::move(params), e);
  }
}

// First integer point where two rational functions differ; used as witness.
Witness rf_witness(const RationalFunction& left, const RationalFunction& right) {
  for (int j = 0; j < 256; ++j) {
    try {
      const Rational l = left.eval(j);
      const Rational r = right.eval(j);
      if (l != r) return {l, r, std::nullopt};
    } catch (const PoleError&) {
    }
  }
  return {0, 0, std::nullopt};
}

void level_value(const IdentityRecord& rec, int n_max, LevelOutcome& out) {
  for (int n = rec.domain; n <= n_max; ++n) {
    out.checks.push_back(guarded({{"n", n}}, [&](Params& p) { return compare(p, lhs(rec.id, n), rhs(rec.id, n)); }));
  }
}

void level_alt(const IdentityRecord& rec, int n_max, LevelOutcome& out) {
  if (rec.id != 7) return;
  for (int n = 1; n <= n_max; ++n) {
    out.checks.push_back(guarded({{"n", n}, {"form", std::string("alt")}}, [&](Params& p) {
      CheckOutcome c = compare(p, lhs(7, n), rhs_alt7(n));
      if (c.witness) c.witness->delta = c.witness->rhs - c.witness->lhs;
      return c;
    }));
  }
}

void level_summand(const IdentityRecord& rec, int n_max, const VerifyOptions& opt, LevelOutcome& out) {
  if (!rec.summand_weight) return;
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= opt.summand_j_max; ++j) {
      out.checks.push_back(guarded({{"n", n}, {"j", j}}, [&](Params& p) {
        const SummandSides s = summand_sides(rec.id, n, j);
        CheckOutcome c = compare(p, s.left, s.right);
        if (c.pass && !summand_check(rec.id, n, j)) {
          c.pass = false;
          c.witness = Witness{s.left, s.right, std::nullopt};
          c.error = "coefficient forms disagree";
        }
        return c;
      }));
    }
  }
}

CheckOutcome decomposition_check(const IdentityRecord& rec, int n, std::optional<int> j) {
  Params params{{"n", n}};
  if (j) params.emplace_back("j", *j);
  return guarded(params, [&](Params& p) {
    const Family fam = build_family(rec.id, n, j);
    const Decomposition got = decompose(fam.function, fam.poles);
    const Decomposition want = rec.expected_decomposition(n, j);
    CheckOutcome c{p, true, std::nullopt, {}};
    if (!verify_decomposition(fam.function, got)) {
      c.pass = false;
      c.error = "reconstruction differs from the family";
      c.witness = rf_witness(got.reconstruct(), fam.function);
      return c;
    }
    if (!got.same_as(want)) {
      c.pass = false;
      c.error = "coefficients differ from the closed forms";
      c.witness = Witness{got.total_residue(), want.total_residue(), std::nullopt};
      for (const auto& part : got.parts) {
        const PolePart* w = want.find(part.pole.location);
        if (w == nullptr || *w != part) {
          c.witness = Witness{part.residue(), w ? w->residue() : Rational(0), std::nullopt};
          break;
        }
      }
    }
    return c;
  });
}

void level_decompose(const IdentityRecord& rec, int n_max, const VerifyOptions& opt, LevelOutcome& out) {
  for (int n = 1; n <= n_max; ++n) {
    if (rec.id <= 2) {
      out.checks.push_back(decomposition_check(rec, n, std::nullopt));
      continue;
    }
    const int j_first = rec.id == 8 ? n + 1 : 1;
    for (int j = j_first; j <= opt.decompose_j_max; ++j) out.checks.push_back(decomposition_check(rec, n, j));
  }
}

void level_certificate_fg(const IdentityRecord& rec, int n_max, const VerifyOptions& opt, LevelOutcome& out) {
  const FgPair& fg = *rec.fg;
  for (int n = 1; n <= n_max; ++n) {
    out.checks.push_back(guarded({{"n", n}, {"kind", std::string("wz")}}, [&](Params& p) {
      const WzRelation rel = fg.relation(n);
      const RationalFunction diff = wz_difference(fg.F, rel, n);
      const RationalFunction g = kernel_to_rf(fg.G(n));
      const RationalFunction dg = g.shift(1) - g;
      CheckOutcome c{p, diff == dg, std::nullopt, {}};
      if (!c.pass) c.witness = rf_witness(diff, dg);
      return c;
    }));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.checks.push_back(guarded({{"n", n}, {"kind", std::string("telescoping")}, {"J", opt.telescope_J}},
                                 [&](Params& p) {
                                   const WzRelation rel = fg.relation(n);
                                   const TermSum next = fg.F(n + 1);
                                   const TermSum here = fg.F(n);
                                   Rational sum;
                                   for (int j = 0; j <= opt.telescope_J; ++j) {
                                     sum += rel.alpha * kernel_eval(next, j) + rel.beta * kernel_eval(here, j) -
                                            rel.gamma;
                                   }
                                   const TermSum g = fg.G(n);
                                   return compare(p, sum, kernel_eval(g, opt.telescope_J + 1) - kernel_eval(g, 0));
                                 }));
  }
  for (int n = 1; n <= std::min(n_max, opt.gosper_n_max); ++n) {
    out.checks.push_back(guarded({{"n", n}, {"kind", std::string("gosper")}}, [&](Params& p) {
      const RationalFunction h = wz_difference(fg.F, fg.relation(n), n);
      const RationalFunction ratio = kernel_ratio(h);
      CheckOutcome c{p, false, std::nullopt, {}};
      const auto cert = gosper(ratio);
      const RationalFunction g = kernel_to_rf(fg.G(n));
      if (!cert) {
        c.error = "not Gosper-summable";
        c.witness = Witness{h.eval(1), 0, std::nullopt};
        return c;
      }
      if (!verify_certificate(ratio, cert->R)) {
        c.error = "certificate fails r R(j+1) - R(j) = 1";
        c.witness = rf_witness(ratio * cert->R.shift(1) - cert->R, RationalFunction(1));
        return c;
      }
      const RationalFunction T = cert->R * h;
      const RationalFunction offset = T - g;
      c.pass = offset.is_polynomial() && offset.numerator().degree() <= 0;
      if (!c.pass) {
        c.error = "antidifference differs from G by a non-constant";
        c.witness = rf_witness(T, g);
      }
      return c;
    }));
  }
}

void level_certificate_dual(const IdentityRecord& rec, int n_max, const VerifyOptions& opt, LevelOutcome& out,
                            std::optional<int>& sigma_out) {
  const DualPair& dual = *rec.dual;
  int sigma = 0;
  try {
    sigma = determine_dual_sigma(dual.F, dual.G);
  } catch (const std::exception& e) {
    out.checks.push_back(failure({{"n", 0L}, {"j", 0L}}, e));
    return;
  }
  sigma_out = sigma;
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 0; j <= opt.dual_j_max; ++j) {
      out.checks.push_back(guarded({{"n", n}, {"j", j}, {"sigma", sigma}}, [&](Params& p) {
        const DualSides s = wz_dual_sides(dual.F, dual.G, n, j, sigma);
        CheckOutcome c{p, s.lhs == s.rhs, std::nullopt, {}};
        if (!c.pass) {
          c.witness = s.lhs.value != s.rhs.value ? Witness{s.lhs.value, s.rhs.value, std::nullopt}
                                                 : Witness{s.lhs.d, s.rhs.d, std::nullopt};
        }
        return c;
      }));
    }
  }
}

void level_recurrence(const IdentityRecord& rec, int n_max, LevelOutcome& out) {
  if (!rec.recurrence) return;
  const RecurrenceData& data = *rec.recurrence;
  for (int n = data.first; n < n_max; ++n) {
    out.checks.push_back(guarded({{"n", n}, {"kind", std::string("step")}}, [&](Params& p) {
      CheckOutcome c{p, recurrence_check(rec.id, n), std::nullopt, {}};
      if (!c.pass) {
        const RecurrenceSpec& s = data.spec;
        c.witness = Witness{s.alpha(n) * lhs(rec.id, n + 1) + s.beta(n) * lhs(rec.id, n), s.rhs(n), std::nullopt};
      }
      return c;
    }));
  }
  if (n_max < data.first) return;
  try {
    const Sequence seq = solve_recurrence(data.spec, data.first, data.initial(), n_max);
    for (int n = data.first; n <= n_max; ++n) {
      out.checks.push_back(guarded({{"n", n}, {"kind", std::string("solution")}},
                                   [&](Params& p) { return compare(p, seq.at(n), rhs(rec.id, n)); }));
    }
  } catch (const std::exception& e) {
    out.checks.push_back(failure({{"n", static_cast<long>(data.first)}, {"kind", std::string("solution")}}, e));
  }
}

}  // namespace

std::string to_string(Level level) {
  switch (level) {
    case Level::value: return "value";
    case Level::summand: return "summand";
    case Level::decompose: return "decompose";
    case Level::certificate: return "certificate";
    case Level::recurrence: return "recurrence";
    case Level::alt: return "alt";
  }
  return "unknown";
}

Level parse_level(const std::string& name) {
  for (Level l : {Level::value, Level::summand, Level::decompose, Level::certificate, Level::recurrence, Level::alt}) {
    if (to_string(l) == name) return l;
  }
  throw std::invalid_argument("unknown level '" + name + "'");
}

std::set<Level> default_levels() {
  return {Level::value, Level::summand, Level::decompose, Level::certificate, Level::recurrence};
}

int VerificationReport::failures() const {
  int count = 0;
  for (const auto& l : levels) {
    count += static_cast<int>(std::count_if(l.checks.begin(), l.checks.end(), [](const CheckOutcome& c) { return !c.pass; }));
  }
  return count;
}

const LevelOutcome* VerificationReport::level(Level l) const {
  for (const auto& lo : levels) {
    if (lo.level == l) return &lo;
  }
  return nullptr;
}

VerificationReport verify(int id, int n_max, const std::set<Level>& levels, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const IdentityRecord& rec = identity(id);
  VerificationReport report;
  report.id = id;
  report.n_max = n_max;
  for (Level l : levels) {
    LevelOutcome out{l, {}};
    switch (l) {
      case Level::value: level_value(rec, n_max, out); break;
      case Level::alt: level_alt(rec, n_max, out); break;
      case Level::summand: level_summand(rec, n_max, options, out); break;
      case Level::decompose: level_decompose(rec, n_max, options, out); break;
      case Level::certificate:
        if (rec.fg) level_certificate_fg(rec, n_max, options, out);
        if (rec.dual) level_certificate_dual(rec, n_max, options, out, report.sigma);
        break;
      case Level::recurrence: level_recurrence(rec, n_max, out); break;
    }
    report.levels.push_back(std::move(out));
  }
  report.timing = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace ctsum
