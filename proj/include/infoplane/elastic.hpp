#pragma once

#include <functional>
#include <string>

#include "infoplane/cantor.hpp"
#include "infoplane/nat.hpp"

namespace infoplane {

/// Parameterization of the stretch function r(x) driving an elastic
/// translation of N^2. The effective stretch is clamped to >= 1 everywhere,
/// so column 0 always maps to itself.
class ElasticSpec {
 public:
  static ElasticSpec constant(Nat c);
  /// r(x) = c * x^k with c >= 1, k >= 1.
  static ElasticSpec polynomial(Nat c, unsigned long k);
  /// Caller-supplied monotone non-decreasing stretch.
  static ElasticSpec custom(std::function<Nat(const Nat&)> r, std::string label = "custom");
  /// The identity translation, i.e. constant stretch 1.
  static ElasticSpec identity();

  /// Effective stretch at column x, clamped to >= 1.
  Nat stretch(const Nat& x) const;

  bool is_constant() const { return kind_ == Kind::Constant; }
  const std::string& label() const { return label_; }

 private:
  enum class Kind { Constant, Polynomial, Custom };

  ElasticSpec(Kind kind, Nat c, unsigned long k, std::function<Nat(const Nat&)> fn,
              std::string label);

  Kind kind_;
  Nat c_;
  unsigned long k_ = 0;
  std::function<Nat(const Nat&)> fn_;
  std::string label_;
};

/// eps_r(x, y) = (x*r(x) + (y mod r(x)), floor(y / r(x))).
Cell elastic_apply(const ElasticSpec& spec, const Cell& c);

/// Exact inverse where defined. Column ownership is found by binary search
/// on the monotone map u -> u*r(u); throws NotInImage on gap columns
/// (growing stretches leave gaps; constant stretches are total bijections).
Cell elastic_invert(const ElasticSpec& spec, const Cell& c);

/// pi . eps_r . pi^-1 : the induced map on N.
Nat chain_forward(const ElasticSpec& spec, const Nat& n);

/// Inverse of chain_forward where defined; propagates NotInImage.
Nat chain_backward(const ElasticSpec& spec, const Nat& n);

/// pi(eps'_c(x, hx)) / pi(x, hx) at a concrete x, with the reference
/// stretch eps'_c(x, y) = (c*x, y/c) evaluated in real arithmetic.
/// Converges to limits::reference_ratio(c, h) as x grows.
double reference_ratio(const Nat& c, double h, const Nat& x);

}  // namespace infoplane
