#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctsum/rational.hpp"

namespace ctsum {

enum class Level { value, summand, decompose, certificate, recurrence, alt };

/// Lowercase level name as used on the command line and in reports.
std::string to_string(Level level);
/// Throws std::invalid_argument for unknown names.
Level parse_level(const std::string& name);

/// value, summand, decompose, certificate, recurrence ("all"); alt is opt-in.
std::set<Level> default_levels();

using ParamValue = std::variant<long, std::string>;

struct Witness {
  Rational lhs;
  Rational rhs;
  std::optional<Rational> delta;
};

struct CheckOutcome {
  std::vector<std::pair<std::string, ParamValue>> params;
  bool pass = true;
  std::optional<Witness> witness;
  std::string error;  // set when the check threw instead of comparing
};

struct LevelOutcome {
  Level level;
  std::vector<CheckOutcome> checks;
};

struct VerificationReport {
  int id = 0;
  int n_max = 0;
  std::vector<LevelOutcome> levels;
  std::optional<int> sigma;  // dual orientation used for identity 8
  std::chrono::milliseconds timing{0};

  int failures() const;
  bool pass() const { return failures() == 0; }
  const LevelOutcome* level(Level l) const;
};

/// Grid sizes for the individual levels.
struct VerifyOptions {
  int summand_j_max = 30;
  int decompose_j_max = 20;
  int dual_j_max = 25;
  int telescope_J = 40;
  int gosper_n_max = 10;
};

/// Runs every requested level of identity `id` for n up to n_max. Failures
/// are report content, never exceptions. Levels that do not apply to an
/// identity (e.g. recurrence for id 1) produce an empty list.
VerificationReport verify(int id, int n_max, const std::set<Level>& levels, const VerifyOptions& options = {});

}  // namespace ctsum
