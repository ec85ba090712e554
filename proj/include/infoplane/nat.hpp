#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace infoplane {

/// Unbounded non-negative integer. All index arithmetic in this library is
/// exact; only information measurements (Bits) live in floating point.
using Nat = mpz_class;

/// Information measurement in bits (binary logarithm).
using Bits = double;

/// Floor of the exact integer square root, by Newton iteration on Nat.
/// Never touches floating point, so it stays exact far above 2^50.
Nat isqrt(const Nat& n);

/// Information content of a natural number: log2(n), with the convention
/// that 0 and 1 carry exactly zero bits.
Bits info(const Nat& n);

/// log2 of a Nat as a plain double (n >= 1). Accurate to ~1 ulp even for
/// numbers far beyond double range.
double log2_nat(const Nat& n);

/// Parses a decimal string into a Nat. Throws std::invalid_argument on
/// malformed input or a leading '-'.
Nat parse_nat(const std::string& text);

/// Parses "a,b,c" into a vector of Nat. Throws std::invalid_argument on
/// malformed input.
std::vector<Nat> parse_nat_list(const std::string& text);

std::string to_string(const Nat& n);

/// Fixed 6-decimal rendering used for all Bits output.
std::string format_bits(Bits b);

}  // namespace infoplane
