#pragma once

#include "infoplane/nat.hpp"

namespace infoplane {

/// Position (x, y) in the discrete plane N^2. x is the column, y the row.
struct Cell {
  Nat x;
  Nat y;

  bool operator==(const Cell& other) const = default;
};

/// Cantor packing: pi(x, y) = (x + y)(x + y + 1)/2 + y. A bijection
/// N^2 -> N that enumerates the plane along counter diagonals x + y = w.
Nat cantor_pair(const Nat& x, const Nat& y);
Nat cantor_pair(const Cell& c);

/// Exact inverse of cantor_pair. Recovers the diagonal w from the integer
/// square root of 8n + 1; isqrt keeps this exact for arbitrarily large n.
Cell cantor_unpair(const Nat& n);

/// Information efficiency of the packing at a cell:
/// info(pi(x, y)) - info(x) - info(y).
Bits delta_pi(const Cell& c);
Bits delta_pi(const Nat& x, const Nat& y);

/// Closed-form limits of delta_pi along structured families of cells.
namespace limits {

/// Along y = x: exactly 1 bit.
Bits diagonal();

/// Along y = h*x through the origin (h > 0): log2((h+1)^2 / 2) - log2(h).
Bits origin_line(double h);

/// Along y = c the efficiency grows without bound; reported out of band.
/// Always throws DivergentLimit.
Bits constant_line(double c);

/// Along x = y after a constant elastic stretch by c >= 1:
/// 2*log2(c + 1/c) - 1. For c = 2 this is 2*log2(5) - 3.
Bits elastic_diagonal(double c);

/// Same limit written as the constant lift of the line x = y:
/// -log2(2/c) - log2(c) + log2(2 + 1/c^2 + c^2).
Bits constant_shift(double c);

/// Limit of pi(eps'_c(x, hx)) / pi(x, hx) for the reference stretch
/// eps'_c(x, y) = (cx, y/c): (c^2 + h)^2 / (c^2 (1 + h)^2). A pure ratio,
/// not bits.
double reference_ratio(double c, double h);

}  // namespace limits

}  // namespace infoplane
