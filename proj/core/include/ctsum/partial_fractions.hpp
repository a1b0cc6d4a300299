#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ctsum/rational_function.hpp"

namespace ctsum {

/// A known pole of a rational function in z, of order 1 or 2.
struct PoleSpec {
  Rational location;
  int order = 1;

  friend bool operator==(const PoleSpec&, const PoleSpec&) = default;
};

/// Laurent coefficients at one pole, highest order first:
/// {c_-2, c_-1} for a double pole, {c_-1} for a simple one.
struct PolePart {
  PoleSpec pole;
  std::vector<Rational> coefficients;

  Rational residue() const { return coefficients.back(); }
  friend bool operator==(const PolePart&, const PolePart&) = default;
};

/// polynomial_part + sum over poles p and orders m of c_-m / (z - p)^m.
struct Decomposition {
  Polynomial polynomial_part;
  std::vector<PolePart> parts;

  const PolePart* find(const Rational& location) const;
  /// Sum of all c_-1.
  Rational total_residue() const;
  RationalFunction reconstruct() const;
  /// Same polynomial part and the same coefficients at the same poles,
  /// regardless of pole order in the list.
  bool same_as(const Decomposition& other) const;
};

/// A catalog rational function together with its poles.
struct Family {
  RationalFunction function;
  std::vector<PoleSpec> poles;
};

/// The rational function in z for identity `id` (1..8) at n (and j for ids
/// 3..8), in reduced form and with the exact list of surviving poles.
///
/// Throws std::invalid_argument for an unknown id, a missing or
/// non-positive j where one is needed, n < 1, and for id 8 with j <= n,
/// where the numerator factor (z + j) would cancel one order of the double
/// pole at -j.
Family build_family(int id, int n, std::optional<int> j = std::nullopt);

/// Partial fraction decomposition over the given poles by deflation:
/// phi(z) = (z - p)^order R(z), c_-order = phi(p), and for a double pole
/// c_-1 = phi'(p).
///
/// Throws std::invalid_argument when prod (z - p)^order is not the
/// denominator of r up to a constant, and PoleError if a deflated function
/// still has a pole at p.
Decomposition decompose(const RationalFunction& r, std::span<const PoleSpec> poles);

bool verify_decomposition(const RationalFunction& r, const Decomposition& d);

}  // namespace ctsum
