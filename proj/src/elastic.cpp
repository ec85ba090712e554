#include "infoplane/elastic.hpp"

#include <stdexcept>
#include <utility>

#include "infoplane/errors.hpp"

namespace infoplane {

ElasticSpec::ElasticSpec(Kind kind, Nat c, unsigned long k,
                         std::function<Nat(const Nat&)> fn, std::string label)
    : kind_(kind), c_(std::move(c)), k_(k), fn_(std::move(fn)), label_(std::move(label)) {}

ElasticSpec ElasticSpec::constant(Nat c) {
  if (c < 1) throw std::invalid_argument("ElasticSpec::constant: c must be >= 1");
  std::string label = "constant(" + c.get_str(10) + ")";
  return ElasticSpec(Kind::Constant, std::move(c), 0, nullptr, std::move(label));
}

ElasticSpec ElasticSpec::polynomial(Nat c, unsigned long k) {
  if (c < 1) throw std::invalid_argument("ElasticSpec::polynomial: c must be >= 1");
  if (k < 1) throw std::invalid_argument("ElasticSpec::polynomial: k must be >= 1");
  std::string label = "poly(" + c.get_str(10) + "*x^" + std::to_string(k) + ")";
  return ElasticSpec(Kind::Polynomial, std::move(c), k, nullptr, std::move(label));
}

ElasticSpec ElasticSpec::custom(std::function<Nat(const Nat&)> r, std::string label) {
  if (!r) throw std::invalid_argument("ElasticSpec::custom: missing function");
  return ElasticSpec(Kind::Custom, 0, 0, std::move(r), std::move(label));
}

ElasticSpec ElasticSpec::identity() { return constant(1); }

Nat ElasticSpec::stretch(const Nat& x) const {
  Nat r;
  switch (kind_) {
    case Kind::Constant:
      r = c_;
      break;
    case Kind::Polynomial: {
      Nat p;
      mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), k_);
      r = c_ * p;
      break;
    }
    case Kind::Custom:
      r = fn_(x);
      break;
  }
  if (r < 1) r = 1;
  return r;
}

Cell elastic_apply(const ElasticSpec& spec, const Cell& c) {
  Nat r = spec.stretch(c.x);
  Nat q, d;
  mpz_fdiv_qr(q.get_mpz_t(), d.get_mpz_t(), c.y.get_mpz_t(), r.get_mpz_t());
  return Cell{c.x * r + d, std::move(q)};
}

Cell elastic_invert(const ElasticSpec& spec, const Cell& c) {
  // Column u owns the x'-interval [u*r(u), u*r(u) + r(u) - 1]; these
  // intervals are disjoint because u -> u*r(u) grows by at least r(u) per
  // step. The owner, if any, is the largest u with u*r(u) <= x'.
  const Nat& xp = c.x;
  Nat lo = 0;
  Nat hi = 1;
  while (hi * spec.stretch(hi) <= xp) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Nat mid = (lo + hi) / 2;
    if (mid * spec.stretch(mid) <= xp) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  Nat r = spec.stretch(lo);
  Nat d = xp - lo * r;
  if (d >= r) {
    throw NotInImage("elastic_invert: column " + to_string(xp) + " is a gap under " +
                     spec.label());
  }
  return Cell{std::move(lo), c.y * r + d};
}

Nat chain_forward(const ElasticSpec& spec, const Nat& n) {
  return cantor_pair(elastic_apply(spec, cantor_unpair(n)));
}

Nat chain_backward(const ElasticSpec& spec, const Nat& n) {
  return cantor_pair(elastic_invert(spec, cantor_unpair(n)));
}

double reference_ratio(const Nat& c, double h, const Nat& x) {
  if (c < 1 || h <= 0 || x < 1) {
    throw std::invalid_argument("reference_ratio: need c >= 1, h > 0, x >= 1");
  }
  const double cd = c.get_d();
  const double xd = x.get_d();
  const double yd = h * xd;
  auto pi_real = [](double a, double b) { return 0.5 * (a + b) * (a + b + 1) + b; };
  return pi_real(cd * xd, yd / cd) / pi_real(xd, yd);
}

}  // namespace infoplane
