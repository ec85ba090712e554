#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infoplane/finset.hpp"
#include "infoplane/kernels.hpp"
#include "infoplane/nat.hpp"

namespace infoplane {

enum class Ground { NaturalsWithZero, PositiveNaturals };

/// Sort key zeta assigning each finite set to a column of the plane.
class SortKey {
 public:
  enum class Kind { Cardinality, Sum, Product, SumUnderF };

  /// Column |s| - 1: the zero-based cardinality column, so that the
  /// cardinality-sorted injection coincides with the canonical set codec.
  static SortKey cardinality();

  /// Column sum(s). Ground defaults to naturals-with-zero, which puts
  /// {0, 1, ..., k} at the foot of its column.
  static SortKey sum(Ground ground = Ground::NaturalsWithZero);

  /// Column prod(s). Requires the positive ground: sets containing 0 would
  /// all share the infinite column 0.
  static SortKey product();

  /// Product over a ground containing 0; kept only so the degenerate
  /// infinite column is reportable. column_height(., 0) throws
  /// InfiniteColumn for this key.
  static SortKey product_with_zero();

  /// Column sum of f over s, where s holds 1-based indices into the
  /// strictly increasing table (a finite prefix of a characteristic
  /// function). Ground: indices 1..table.size().
  static SortKey sum_under(std::vector<Nat> table);

  Kind kind() const { return kind_; }
  Ground ground() const { return ground_; }
  const std::vector<Nat>& table() const { return table_; }
  std::string label() const;

  bool in_ground(const FinSet& s) const;

 private:
  SortKey(Kind kind, Ground ground, std::vector<Nat> table);

  Kind kind_;
  Ground ground_;
  std::vector<Nat> table_;
};

/// zeta(s) for a non-empty set in the key's ground; throws GroundViolation
/// otherwise.
Nat zeta(const SortKey& key, const FinSet& s);

/// Literal sorted-index loop: scan canonical indices k = 0..phi(s), count
/// ground sets whose zeta matches. The count includes s itself, so the
/// zero-based theta is count - 1. Exponential in the representation of s.
Nat theta_alg1_count(const SortKey& key, const FinSet& s);
Nat theta_alg1(const SortKey& key, const FinSet& s);

/// Same value as theta_alg1, computed by streaming the canonical
/// enumeration once and bucketing by zeta value.
Nat theta_bucketed(const SortKey& key, const FinSet& s, Exec exec = Exec::Parallel);

/// A set's position under a sorted injection: column zeta(s), row theta,
/// packed code pi(zeta, theta).
struct SortedCell {
  Nat key;
  Nat theta;
  Nat code;
};

SortedCell phi_sorted(const SortKey& key, const FinSet& s, Exec exec = Exec::Parallel);

/// One surveyed set under a sort key.
struct SortedRow {
  Nat index;  // canonical index
  FinSet set;
  Nat key;
  Nat theta;
  Nat code;
};

/// Surveys the first `first_n` canonical sets, skipping sets outside the
/// key's ground, assigning each its column and zero-based row in stream
/// order. Rows come back in canonical order.
std::vector<SortedRow> sorted_survey(const SortKey& key, size_t first_n,
                                     Exec exec = Exec::Parallel);

/// Number of ground sets with zeta(s) = value, counted by direct
/// enumeration of the (intrinsically finite) column. `cap` > 0 bounds the
/// count and throws EnumerationCap beyond it. Throws InfiniteColumn for
/// keys whose columns are infinite (cardinality; product value 0 over a
/// ground with 0).
Nat column_height(const SortKey& key, const Nat& value, const Nat& cap = 0);

struct DensityPoint {
  Nat n;
  Nat occupied;  // codes <= n realized by the surveyed sets
};

/// Surveys the first survey_limit canonical sets and reports, for each
/// prefix [0, n] with n < survey_limit, how many realized codes fall in it.
/// Raw occupancy curves; no normalization is imposed.
std::vector<DensityPoint> density_profile(const SortKey& key, size_t survey_limit,
                                          Exec exec = Exec::Parallel);

/// True iff some non-empty subset of `ground` sums to target. Walks the
/// subsets in canonical order of their zero-based index-sets.
bool subset_sum_decide(const FinSet& ground, const Nat& target);

/// Same question for a sum-under-f key: is target a subset sum of the
/// table prefix.
bool subset_sum_decide(const SortKey& sum_under_key, const Nat& target);

/// n-th subset (n >= 1) of `ground` with the given sum, in canonical order
/// of index-sets; nullopt when fewer than n exist.
std::optional<FinSet> nth_subset_with_sum(const FinSet& ground, const Nat& target,
                                          const Nat& n);

}  // namespace infoplane
