#include "ctsum/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace ctsum {

const Rational& Sequence::at(int n) const {
  if (n < first || n > last()) throw std::out_of_range("sequence index " + std::to_string(n) + " out of range");
  return values[static_cast<std::size_t>(n - first)];
}

Sequence solve_recurrence(const RecurrenceSpec& spec, int first, const Rational& initial, int last) {
  if (last < first) throw std::invalid_argument("recurrence range is empty");
  Sequence s{first, {initial}};
  s.values.reserve(static_cast<std::size_t>(last - first) + 1);
  for (int n = first; n < last; ++n) {
    const Rational a = spec.alpha(n);
    if (a.is_zero()) {
      throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
    }
    s.values.push_back((spec.rhs(n) - spec.beta(n) * s.values.back()) / a);
  }
  return s;
}

}  // namespace ctsum
