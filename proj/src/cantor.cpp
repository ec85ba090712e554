#include "infoplane/cantor.hpp"

#include <cmath>
#include <stdexcept>

#include "infoplane/errors.hpp"

namespace infoplane {

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat w = x + y;
  return w * (w + 1) / 2 + y;
}

Nat cantor_pair(const Cell& c) { return cantor_pair(c.x, c.y); }

Cell cantor_unpair(const Nat& n) {
  if (n < 0) throw std::invalid_argument("cantor_unpair: negative index");
  // w = floor((sqrt(8n + 1) - 1) / 2); t = w(w+1)/2 is the triangular
  // number at the start of diagonal w.
  Nat w = (isqrt(8 * n + 1) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = n - t;
  Nat x = w - y;
  return Cell{std::move(x), std::move(y)};
}

Bits delta_pi(const Cell& c) { return delta_pi(c.x, c.y); }

Bits delta_pi(const Nat& x, const Nat& y) {
  return info(cantor_pair(x, y)) - info(x) - info(y);
}

namespace limits {

Bits diagonal() { return 1.0; }

Bits origin_line(double h) {
  if (h <= 0) throw std::invalid_argument("origin_line: h must be positive");
  return std::log2(0.5 * (h + 1) * (h + 1)) - std::log2(h);
}

Bits constant_line(double c) {
  if (c < 1) throw std::invalid_argument("constant_line: c must be >= 1");
  throw DivergentLimit("delta_pi is unbounded along y = " + format_bits(c));
}

Bits elastic_diagonal(double c) {
  if (c < 1) throw std::invalid_argument("elastic_diagonal: c must be >= 1");
  return 2.0 * std::log2(c + 1.0 / c) - 1.0;
}

Bits constant_shift(double c) {
  if (c < 1) throw std::invalid_argument("constant_shift: c must be >= 1");
  return -std::log2(2.0 / c) - std::log2(c) + std::log2(2.0 + 1.0 / (c * c) + c * c);
}

double reference_ratio(double c, double h) {
  if (c < 1 || h <= 0) throw std::invalid_argument("reference_ratio: need c >= 1, h > 0");
  const double num = (c * c + h) * (c * c + h);
  const double den = c * c * (1 + h) * (1 + h);
  return num / den;
}

}  // namespace limits

}  // namespace infoplane
