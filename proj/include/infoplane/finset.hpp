#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infoplane/nat.hpp"

namespace infoplane {

/// Finite set of naturals, canonically stored strictly ascending.
class FinSet {
 public:
  FinSet() = default;

  /// Builds from arbitrary values; sorts and rejects duplicates.
  static FinSet from_values(std::vector<Nat> values);

  /// Builds from values already known to be strictly ascending (asserted in
  /// debug builds). Used by decoders whose output is ascending by
  /// construction.
  static FinSet from_sorted(std::vector<Nat> values);

  const std::vector<Nat>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Nat& min() const { return elems_.front(); }
  const Nat& max() const { return elems_.back(); }

  /// Every element shifted by +1 (to positive naturals).
  FinSet shifted_up() const;
  /// Every element shifted by -1; requires min() >= 1.
  FinSet shifted_down() const;

  bool operator==(const FinSet& other) const = default;
  auto operator<=>(const FinSet& other) const = default;

  /// "a,b,c" with ascending elements; empty string for the empty set.
  std::string str() const;

 private:
  std::vector<Nat> elems_;
};

}  // namespace infoplane
