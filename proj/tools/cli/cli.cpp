#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "cli/expression.hpp"
#include "cli/report_json.hpp"
#include "ctsum/catalog.hpp"
#include "ctsum/gosper.hpp"
#include "ctsum/partial_fractions.hpp"
#include "ctsum/verify.hpp"

namespace ctsum::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_identities(const std::string& text) {
  if (text == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  try {
    std::size_t used = 0;
    const int id = std::stoi(text, &used);
    if (used == text.size() && id >= 1 && id <= 8) return {id};
  } catch (const std::exception&) {
  }
  throw UsageError("--identity must be 1-8 or 'all', got '" + text + "'");
}

std::set<Level> parse_levels(const std::string& text, bool alt) {
  std::set<Level> levels;
  if (text == "all") {
    levels = default_levels();
  } else {
    try {
      levels.insert(parse_level(text));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (alt) levels.insert(Level::alt);
  return levels;
}

void print_summary(const VerificationReport& r, std::ostream& out) {
  out << "identity " << r.id << " (n <= " << r.n_max << "):";
  for (const auto& l : r.levels) {
    const auto passed = std::count_if(l.checks.begin(), l.checks.end(), [](const CheckOutcome& c) { return c.pass; });
    out << ' ' << to_string(l.level) << ' ' << passed << '/' << l.checks.size();
  }
  if (r.sigma) out << " sigma " << *r.sigma;
  out << (r.pass() ? "  PASS" : "  FAIL") << '\n';
  for (const auto& l : r.levels) {
    for (const auto& c : l.checks) {
      if (c.pass) continue;
      out << "  " << to_string(l.level) << " failed at";
      for (const auto& [key, value] : c.params) {
        out << ' ' << key << '=';
        std::visit([&out](const auto& v) { out << v; }, value);
      }
      if (c.witness) {
        out << ": lhs " << c.witness->lhs << ", rhs " << c.witness->rhs;
        if (c.witness->delta) out << ", delta " << *c.witness->delta;
      }
      if (!c.error.empty()) out << " (" << c.error << ')';
      out << '\n';
    }
  }
}

int write_reports(const std::vector<VerificationReport>& reports, std::chrono::milliseconds timing,
                  const std::string& json_path, std::ostream& out, std::ostream& err) {
  int failures = 0;
  for (const auto& r : reports) {
    print_summary(r, out);
    failures += r.failures();
  }
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      err << "error: cannot write " << json_path << '\n';
      return kExitUsage;
    }
    file << report_to_json(reports, timing).dump(2) << '\n';
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitSuccess : kExitFailure;
}

int run_verify(const std::vector<int>& ids, int n_max, const std::set<Level>& levels, const std::string& json_path,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  for (int id : ids) reports.push_back(verify(id, n_max, levels));
  const auto timing =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return write_reports(reports, timing, json_path, out, err);
}

int run_decompose(int id, int n, std::optional<int> j, std::ostream& out) {
  const Family fam = build_family(id, n, j);
  const Decomposition d = decompose(fam.function, fam.poles);
  out << "identity " << id << ", n = " << n;
  if (j) out << ", j = " << *j;
  out << "\nR(z) = " << fam.function.to_string('z') << '\n';
  out << "polynomial part: " << d.polynomial_part.to_string('z') << '\n';
  for (const auto& part : d.parts) {
    out << "pole z = " << part.pole.location << " (order " << part.pole.order << "):";
    for (std::size_t i = 0; i < part.coefficients.size(); ++i) {
      out << (i == 0 ? " " : ", ") << "c_-" << (part.pole.order - static_cast<int>(i)) << " = "
          << part.coefficients[i];
    }
    out << '\n';
  }
  const bool ok = verify_decomposition(fam.function, d);
  out << "reconstruction: " << (ok ? "exact" : "MISMATCH") << '\n';
  return ok ? kExitSuccess : kExitFailure;
}

int run_gosper(const std::string& text, std::ostream& out) {
  const RationalFunction r = parse_ratfun(text);
  if (r.is_zero()) throw UsageError("the term ratio must be nonzero");
  out << "ratio r(j) = " << render(r) << '\n';
  const auto cert = gosper(r);
  if (!cert) {
    out << "not Gosper-summable\n";
    return kExitSuccess;
  }
  const bool ok = verify_certificate(r, cert->R);
  out << "certificate R(j) = " << render(cert->R) << '\n';
  out << "r(j) R(j+1) - R(j) = 1: " << (ok ? "verified" : "FAILED") << '\n';
  return ok ? kExitSuccess : kExitFailure;
}

int run_certificate(int id, int n, std::ostream& out) {
  const IdentityRecord& rec = identity(id);
  const WzRelation rel = rec.fg->relation(n);
  out << "identity " << id << ", n = " << n << '\n';
  out << "F(n,j)   = " << kernel_to_rf(rec.fg->F(n)) << '\n';
  out << "F(n+1,j) = " << kernel_to_rf(rec.fg->F(n + 1)) << '\n';
  out << "G(n,j)   = " << kernel_to_rf(rec.fg->G(n)) << '\n';
  out << "relation: (" << rel.alpha << ") F(n+1,j) + (" << rel.beta << ") F(n,j) = G(n,j+1) - G(n,j) + ("
      << rel.gamma << ")\n";
  const bool ok = certificate_check(id, n);
  out << "identity in j: " << (ok ? "verified" : "FAILED") << '\n';
  return ok ? kExitSuccess : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of binomial harmonic-number sums by partial fractions and creative telescoping",
               "ctsum"};
  app.require_subcommand(1);

  std::string identity_text;
  int n_max = 0;
  std::string level_text = "all";
  bool alt = false;
  std::string json_path;
  auto* verify_cmd = app.add_subcommand("verify", "Verify identities level by level");
  verify_cmd->add_option("--identity", identity_text, "1-8 or all")->required();
  verify_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--level", level_text, "value|summand|decompose|certificate|recurrence|all");
  verify_cmd->add_flag("--alt", alt, "Also assert the alternative closed form of identity 7");
  verify_cmd->add_option("--json", json_path, "Write a JSON report");

  int dec_id = 0;
  int dec_n = 0;
  std::optional<int> dec_j;
  auto* decompose_cmd = app.add_subcommand("decompose", "Partial fraction decomposition of a family");
  decompose_cmd->add_option("--identity", dec_id)->required()->check(CLI::Range(1, 8));
  decompose_cmd->add_option("--n", dec_n)->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--j", dec_j)->check(CLI::PositiveNumber);

  std::string ratio_text;
  auto* gosper_cmd = app.add_subcommand("gosper", "Run Gosper's algorithm on a term ratio in j");
  gosper_cmd->add_option("--ratio", ratio_text, "t(j+1)/t(j), e.g. \"j/(j+2)\"")->required();

  int cert_id = 0;
  int cert_n = 0;
  auto* certificate_cmd = app.add_subcommand("certificate", "Check the stored F/G pair of an identity");
  certificate_cmd->add_option("--identity", cert_id)->required()->check(CLI::Range(3, 7));
  certificate_cmd->add_option("--n", cert_n)->required()->check(CLI::PositiveNumber);

  int report_n_max = 0;
  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "Verify every identity at every level and write JSON");
  report_cmd->add_option("--n-max", report_n_max)->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--json", report_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      return run_verify(parse_identities(identity_text), n_max, parse_levels(level_text, alt), json_path, out, err);
    }
    if (*decompose_cmd) {
      if (dec_id >= 3 && !dec_j) throw UsageError("identity " + std::to_string(dec_id) + " needs --j");
      return run_decompose(dec_id, dec_n, dec_j, out);
    }
    if (*gosper_cmd) return run_gosper(ratio_text, out);
    if (*certificate_cmd) return run_certificate(cert_id, cert_n, out);
    if (*report_cmd) {
      std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8};
      return run_verify(all, report_n_max, default_levels(), report_path, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ctsum::cli
