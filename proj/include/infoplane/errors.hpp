#pragma once

#include <stdexcept>
#include <string>

namespace infoplane {

/// A cell or index outside the image of a partial map (elastic inversion,
/// appendix-mode decoding).
struct NotInImage : std::domain_error {
  explicit NotInImage(const std::string& what) : std::domain_error(what) {}
};

/// A set that violates a sort key's ground (e.g. 0 under a product key).
struct GroundViolation : std::domain_error {
  explicit GroundViolation(const std::string& what) : std::domain_error(what) {}
};

/// An operation whose domain excludes the empty set.
struct EmptySetError : std::domain_error {
  explicit EmptySetError(const std::string& what) : std::domain_error(what) {}
};

/// Exhaustive enumeration requested above the supported size.
struct SizeLimit : std::domain_error {
  explicit SizeLimit(const std::string& what) : std::domain_error(what) {}
};

/// Column with infinitely many member sets (cardinality columns, product
/// value 0 over a ground containing 0).
struct InfiniteColumn : std::domain_error {
  explicit InfiniteColumn(const std::string& what) : std::domain_error(what) {}
};

/// A limit that diverges; reported out of band instead of as a sentinel.
struct DivergentLimit : std::domain_error {
  explicit DivergentLimit(const std::string& what) : std::domain_error(what) {}
};

/// Enumeration exceeded the caller-supplied cap.
struct EnumerationCap : std::runtime_error {
  explicit EnumerationCap(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infoplane
