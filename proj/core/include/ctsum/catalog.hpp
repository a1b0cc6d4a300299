#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ctsum/partial_fractions.hpp"
#include "ctsum/recurrence.hpp"
#include "ctsum/wz.hpp"

namespace ctsum {

/// F/G pair with the relation alpha F(n+1,j) + beta F(n,j) = G(n,j+1) - G(n,j) + gamma.
struct FgPair {
  KernelFamily F;
  KernelFamily G;
  std::function<WzRelation(int n)> relation;
};

/// F/G pair in the small parameter x, related by
/// -(n+1)F(n,j) + (n+1)F(n+1,j) = sigma [G(n,j+1) - G(n,j)].
struct DualPair {
  DualFamily F;
  DualFamily G;
};

struct RecurrenceData {
  RecurrenceSpec spec;
  int first = 0;
  /// S(first).
  std::function<Rational()> initial;
};

/// One identity sum_k C(n,k) C(n+k,k) (-1)^(n-k) X(n,k) = rhs(n).
struct IdentityRecord {
  int id = 0;
  int domain = 0;   // smallest valid n
  int k_first = 0;  // the k-sum runs over k_first..n
  std::string lhs_weight;
  std::string rhs_text;
  std::function<Rational(int n, int k)> weight;
  std::function<Rational(int n)> rhs;

  /// j-level identity for ids 3..8: sum_k C C (-1)^(n-k) summand_weight(n,k,j) = summand_closed(n,j).
  std::function<Rational(int n, int k, int j)> summand_weight;
  std::function<Rational(int n, int j)> summand_closed;
  /// Extra term added to the left side of the j-level identity (id 8 only).
  std::function<Rational(int n, int j)> summand_boundary;

  /// Coefficients of the partial fraction decomposition of build_family(id, n, j)
  /// in closed form.
  std::function<Decomposition(int n, std::optional<int> j)> expected_decomposition;

  std::optional<FgPair> fg;
  std::optional<DualPair> dual;
  std::optional<RecurrenceData> recurrence;
};

/// Throws std::invalid_argument for ids outside 1..8.
const IdentityRecord& identity(int id);

/// C(n,k) C(n+k,k) (-1)^(n-k).
Rational base_weight(int n, int k);

/// Throws std::domain_error for n below the identity's domain.
Rational lhs(int id, int n);
Rational rhs(int id, int n);

/// The second closed form quoted for identity 7. It does not agree with the
/// sum; the verifier reports the difference instead of asserting equality.
Rational rhs_alt7(int n);

/// The j-level identity for id 3..8, n >= 1, j >= 1.
struct SummandSides {
  Rational left;
  Rational right;
};
SummandSides summand_sides(int id, int n, int j);
bool summand_check(int id, int n, int j);

/// ID 8's boundary kernel (j-1+x)!^2 / ((n+j+x)! (j-1+x-n)!) as a jet; its
/// d-slot is minus the H-combination coefficient of the j-level identity.
GammaDual id8_boundary_jet(int n, int j);

/// wz_verify on the stored pair (ids 3..7).
bool certificate_check(int id, int n);

/// Stored recurrence at n against (a) the G asymptotics and boundary value
/// and (b) directly computed sums. For id 8 the dual route and the direct
/// T values are used.
bool recurrence_check(int id, int n);

}  // namespace ctsum
