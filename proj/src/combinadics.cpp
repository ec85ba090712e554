#include "infoplane/combinadics.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "infoplane/errors.hpp"

namespace infoplane {

Nat binom(const Nat& n, const Nat& k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binom: negative argument");
  if (n < k) return 0;
  if (!k.fits_ulong_p()) {
    // k <= n and k > ULONG_MAX would mean an astronomically large n too;
    // no caller gets anywhere near this.
    throw std::invalid_argument("binom: k too large");
  }
  Nat r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Nat sigma_encode(const FinSet& s) {
  if (s.empty()) throw EmptySetError("sigma_encode: empty set has no index");
  Nat idx = 0;
  Nat pos = 1;
  for (const Nat& e : s.elements()) {
    idx += binom(e, pos);
    pos += 1;
  }
  return idx;
}

namespace {

// Largest m with binom(m, j) <= rem. binom(m, j) is 0 up to m = j - 1 and
// then strictly increasing, so gallop from j - 1 and binary search.
Nat largest_binom_at_most(const Nat& j, const Nat& rem) {
  Nat lo = j - 1;  // binom(j - 1, j) = 0 <= rem always
  Nat hi = j;
  while (binom(hi, j) <= rem) {
    lo = hi;
    hi *= 2;
  }
  // Invariant: binom(lo, j) <= rem < binom(hi, j).
  while (hi - lo > 1) {
    Nat mid = (lo + hi) / 2;
    if (binom(mid, j) <= rem) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return lo;
}

}  // namespace

FinSet sigma_decode(const Nat& k, const Nat& idx) {
  if (k < 1) throw std::invalid_argument("sigma_decode: cardinality must be >= 1");
  if (idx < 0) throw std::invalid_argument("sigma_decode: negative index");
  std::vector<Nat> descending;
  Nat rem = idx;
  for (Nat j = k; j >= 1; j -= 1) {
    Nat m = largest_binom_at_most(j, rem);
    rem -= binom(m, j);
    descending.push_back(std::move(m));
  }
  std::vector<Nat> ascending(descending.rbegin(), descending.rend());
  return FinSet::from_sorted(std::move(ascending));
}

Nat catalan(const Nat& n) {
  return binom(2 * n, n) / (n + 1);
}

Nat stirling2(const Nat& n, const Nat& k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here: the empty partition
  if (k == 0) return 0;
  if (!n.fits_ulong_p()) throw std::invalid_argument("stirling2: n too large");
  const unsigned long un = n.get_ui();
  const unsigned long uk = k.get_ui();
  // Row-by-row table over k' = 0..uk.
  std::vector<Nat> row(uk + 1, Nat(0));
  row[0] = 1;  // S(0, 0)
  for (unsigned long i = 1; i <= un; ++i) {
    for (unsigned long j = std::min(i, uk); j >= 1; --j) {
      row[j] = Nat(j) * row[j] + row[j - 1];
    }
    row[0] = 0;  // S(i, 0) = 0 for i >= 1
  }
  return row[uk];
}

Nat bell(const Nat& n) {
  Nat total = 0;
  for (Nat k = 0; k <= n; k += 1) total += stirling2(n, k);
  return total;
}

Nat computation_count(const Nat& n, ComputationKind kind) {
  if (n < 1) throw std::invalid_argument("computation_count: n must be >= 1");
  switch (kind) {
    case ComputationKind::NonCommNonAssoc: {
      if (!n.fits_ulong_p()) throw std::invalid_argument("computation_count: n too large");
      Nat fact;
      mpz_fac_ui(fact.get_mpz_t(), n.get_ui());
      return fact * catalan(n - 1);
    }
    case ComputationKind::CommNonAssocLowerBound:
      return bell(n);
    case ComputationKind::CommAssoc:
      return 1;
  }
  throw std::logic_error("computation_count: unknown kind");
}

}  // namespace infoplane
