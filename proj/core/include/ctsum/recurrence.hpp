#pragma once

#include <functional>
#include <vector>

#include "ctsum/rational.hpp"

namespace ctsum {

/// alpha(n) S(n+1) + beta(n) S(n) = rhs(n).
struct RecurrenceSpec {
  std::function<Rational(int)> alpha;
  std::function<Rational(int)> beta;
  std::function<Rational(int)> rhs;
};

/// S(first), S(first+1), ..., S(last).
struct Sequence {
  int first = 0;
  std::vector<Rational> values;

  int last() const { return first + static_cast<int>(values.size()) - 1; }
  const Rational& at(int n) const;
};

/// Forward solution from S(first) = initial up to S(last) via
/// S(n+1) = (rhs(n) - beta(n) S(n)) / alpha(n). Throws std::domain_error
/// when alpha vanishes inside the range.
Sequence solve_recurrence(const RecurrenceSpec& spec, int first, const Rational& initial, int last);

}  // namespace ctsum
