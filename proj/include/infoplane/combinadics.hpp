#pragma once

#include "infoplane/finset.hpp"
#include "infoplane/nat.hpp"

namespace infoplane {

/// Exact binomial coefficient; 0 whenever n < k. The n < k convention is
/// load-bearing: it makes sigma_encode of sets with small elements come out
/// right (binom(0, 1) = 0 and friends).
Nat binom(const Nat& n, const Nat& k);

/// Rank of a strictly ascending set s1 < s2 < ... < sk in the k-dimensional
/// combinatorial number system: sum of binom(si, i) over 1-based positions.
/// Bijective onto N for each fixed cardinality k. Throws EmptySetError on
/// the empty set.
Nat sigma_encode(const FinSet& s);

/// Inverse of sigma_encode for cardinality k >= 1: greedy extraction of the
/// largest m with binom(m, j) <= remainder, from position j = k down to 1.
FinSet sigma_decode(const Nat& k, const Nat& idx);

/// binom(2n, n) / (n + 1): the number of bracketings of n + 1 leaves.
Nat catalan(const Nat& n);

/// Partitions of an n-set into k non-empty blocks, by the standard
/// recurrence S(n, k) = k*S(n-1, k) + S(n-1, k-1).
Nat stirling2(const Nat& n, const Nat& k);

/// Total partitions of an n-set: sum over k of stirling2(n, k).
Nat bell(const Nat& n);

enum class ComputationKind {
  /// Non-commutative, non-associative operator: n! * catalan(n - 1)
  /// distinct computations over n operands.
  NonCommNonAssoc,
  /// Commutative, non-associative: no closed form is known; this returns
  /// the Bell-number lower bound, never an exact count.
  CommNonAssocLowerBound,
  /// Commutative and associative: exactly one computation.
  CommAssoc,
};

/// Number of distinct computations an operator admits over n >= 1 operands
/// (lower bound for the commutative non-associative case).
Nat computation_count(const Nat& n, ComputationKind kind);

}  // namespace infoplane
