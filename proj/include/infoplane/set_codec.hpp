#pragma once

#include <optional>

#include "infoplane/cantor.hpp"
#include "infoplane/combinadics.hpp"
#include "infoplane/finset.hpp"

namespace infoplane {

enum class CodecMode {
  /// pair(|s| - 1, sigma(s)) with sigma taken over N directly (0 allowed).
  /// A true bijection between non-empty finite sets and N: cardinality-k
  /// sets fill exactly column k - 1, and {0, 1, ..., k} sits at (k, 0).
  Canonical,
  /// Reproduces the positive-naturals worked layout: shift every element up
  /// by one and return pair(|s|, sigma(shifted)). An injection with gaps;
  /// decoding a cell outside the image raises NotInImage.
  Appendix,
};

/// Index of a non-empty finite set. Throws EmptySetError on the empty set.
Nat set_encode(const FinSet& s, CodecMode mode = CodecMode::Canonical);

/// Inverse of set_encode in the matching mode. In appendix mode, throws
/// NotInImage for column 0 and for cells whose decoded shifted set would
/// contain 0 (no preimage under the +1 shift).
FinSet set_decode(const Nat& n, CodecMode mode = CodecMode::Canonical);

/// Lazy canonical enumeration: yields set_decode(0), set_decode(1), ... up
/// to `limit` sets. Each stream is independent state.
class CanonicalSetStream {
 public:
  explicit CanonicalSetStream(Nat limit) : limit_(std::move(limit)) {}

  /// Next set and its canonical index, or nullopt when exhausted.
  std::optional<FinSet> next();

  const Nat& index() const { return next_index_; }

 private:
  Nat limit_;
  Nat next_index_ = 0;
};

}  // namespace infoplane
