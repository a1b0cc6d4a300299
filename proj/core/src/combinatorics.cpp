#include "ctsum/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctsum {
namespace {

// Append-only factorial table shared by all threads.
class FactorialTable {
 public:
  Integer get(int m) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(m) < table_.size()) return table_[m];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= static_cast<std::size_t>(m)) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[m];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Integer> table_{Integer(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

Integer factorial(int m) {
  if (m < 0) throw std::domain_error("factorial of negative integer " + std::to_string(m));
  return factorial_table().get(m);
}

Rational recip_factorial(int m) {
  if (m < 0) return Rational(0);
  return Rational(Integer(1), factorial(m));
}

Integer binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial with negative n " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational harmonic(int n, int m) {
  if (n < 0) throw std::domain_error("harmonic number with negative index");
  if (m < 1) throw std::domain_error("harmonic number with order < 1");
  Rational sum;
  for (int i = 1; i <= n; ++i) sum += Rational(i).pow(m).reciprocal();
  return sum;
}

Rational alt_harmonic2(int n) {
  if (n < 0) throw std::domain_error("alternating harmonic number with negative index");
  Rational sum;
  for (int k = 1; k <= n; ++k) {
    const Rational term = Rational(1, static_cast<long>(k) * k);
    if (k % 2 == 1) sum += term; else sum -= term;
  }
  return sum;
}

}  // namespace ctsum
