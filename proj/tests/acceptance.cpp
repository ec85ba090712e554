// Acceptance gate: one pass/fail line per criterion, each with its stated
// tolerances and runtime budget pinned in code. Exit code is the number of
// failed criteria.
#include <gmpxx.h>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "infoplane/cantor.hpp"
#include "infoplane/combinadics.hpp"
#include "infoplane/elastic.hpp"
#include "infoplane/errors.hpp"
#include "infoplane/info_calculus.hpp"
#include "infoplane/kernels.hpp"
#include "infoplane/set_codec.hpp"
#include "infoplane/sorted.hpp"

using namespace infoplane;
using Clock = std::chrono::steady_clock;

namespace {

struct Gate {
  int failed = 0;

  void report(int criterion, const std::string& name, bool ok, double ms,
              const std::string& detail = "") {
    std::printf("%s criterion %d: %s [%.2f ms]%s\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), ms, detail.empty() ? "" : (" -- " + detail).c_str());
    if (!ok) ++failed;
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// --- oracles local to the gate ---------------------------------------------

void partitions_by_blocks(unsigned n, std::vector<unsigned long>& by_blocks) {
  std::vector<unsigned> rgs(n, 0);
  by_blocks.assign(n + 1, 0);
  if (n == 0) {
    by_blocks.assign(1, 1);
    return;
  }
  while (true) {
    unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    by_blocks[blocks] += 1;
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      unsigned prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        rgs[i] += 1;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
}

unsigned long count_labeled_ordered_trees(unsigned n_leaves) {
  if (n_leaves == 1) return 1;
  // distinct labels: recurse over ordered splits of the label set
  struct Rec {
    static unsigned long go(unsigned long label_mask, unsigned n) {
      unsigned count = __builtin_popcountl(label_mask);
      if (count == 1) return 1;
      unsigned long total = 0;
      // iterate proper non-empty submasks as the left child
      for (unsigned long sub = (label_mask - 1) & label_mask; sub;
           sub = (sub - 1) & label_mask) {
        if (sub == label_mask) continue;
        total += go(sub, n) * go(label_mask & ~sub, n);
      }
      return total;
    }
  };
  return Rec::go((1ul << n_leaves) - 1, n_leaves);
}

unsigned long distinct_partitions(unsigned n) {
  std::vector<unsigned long> dp(n + 1, 0);
  dp[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned s = n; s >= part; --s) dp[s] += dp[s - part];
  }
  return dp[n];
}

// --- criteria ----------------------------------------------------------------

void criterion1(Gate& gate) {
  const FinSet original = FinSet::from_values({0, 3, 5, 7, 9, 10});
  // warm-up outside the timed window
  (void)set_encode(original, CodecMode::Appendix);

  auto start = Clock::now();
  Nat sigma = sigma_encode(original.shifted_up());
  Nat code = set_encode(original, CodecMode::Appendix);
  FinSet back = set_decode(code, CodecMode::Appendix);
  double ms = ms_since(start);

  bool ok = sigma == 811 && code == 334964 && back == original && ms < 1.0;
  gate.report(1, "appendix round trip (sigma 811, code 334964, < 1 ms)", ok, ms);
}

void criterion2(Gate& gate) {
  auto start = Clock::now();
  bool ok = true;

#pragma omp parallel for reduction(&& : ok) schedule(dynamic, 64)
  for (long n = 0; n < 100000; ++n) {
    ok = ok && cantor_pair(cantor_unpair(n)) == n;
  }
#pragma omp parallel for reduction(&& : ok) schedule(dynamic, 8)
  for (long x = 0; x < 300; ++x) {
    for (long y = 0; y < 300; ++y) {
      ok = ok && cantor_unpair(cantor_pair(x, y)) == Cell{x, y};
    }
  }
  for (unsigned long w = 0; w < 200 && ok; ++w) {
    Nat base = Nat(w) * (w + 1) / 2;
    std::set<Nat> seen;
    for (unsigned long x = 0; x <= w; ++x) {
      Nat p = cantor_pair(x, w - x);
      ok = ok && p >= base && p <= base + w && seen.insert(p).second;
    }
    ok = ok && seen.size() == w + 1;
  }

  double ms = ms_since(start);
  ok = ok && ms < 1000.0;
  gate.report(2, "pairing round trips and diagonal contiguity (< 1 s)", ok, ms);
}

void criterion3(Gate& gate) {
  auto start = Clock::now();
  std::string detail;

  bool ok1 = std::abs(delta_pi(Nat(1000000), Nat(1000000)) - 1.0) < 1e-5;
  bool ok2 =
      std::abs(delta_pi(Nat(1000000), Nat(3000000)) - (std::log2(8.0) - std::log2(3.0))) < 1e-4;
  bool ok3 = std::abs(reference_ratio(3, 2.0, 1000000) - 121.0 / 81.0) < 1e-3;

  Window diag{Nat(1000000), Nat(1000000), Nat(1000000), Nat(1000000), 1};
  auto grid = surface_grid(ElasticSpec::constant(2), diag);
  bool ok4 = grid.size() == 1 &&
             std::abs(grid[0].delta - (2 * std::log2(5.0) - 3.0)) < 1e-3;

  double ms = ms_since(start);
  bool ok = ok1 && ok2 && ok3 && ok4 && ms < 1000.0;
  if (!ok1) detail += "diagonal limit off; ";
  if (!ok2) detail += "origin-line limit off; ";
  if (!ok3) detail += "reference ratio off; ";
  if (!ok4) detail += "stretched diagonal off; ";
  gate.report(3, "efficiency limits at x = 10^6 (< 1 s)", ok, ms, detail);
}

void criterion4(Gate& gate) {
  auto start = Clock::now();

  bool ok = std::abs(delta_add(2, 98) - (-0.9708)) < 0.01;

  TreePtr worked = parse_expression("(2+98)+(47+53)");
  Bits collapse_total = tree_delta(CompTree{worked, DeltaMode::Collapse}).total;
  ok = ok && std::abs(collapse_total - (-4.6094)) < 1e-3;
  ok = ok && std::abs(collapse_total - (-4.67)) < 0.15;

  auto trees = enumerate_trees({2, 47, 53, 98}, OpKind::Add);
  ok = ok && trees.size() == 15;
  for (const auto& t : trees) {
    ok = ok && std::abs(tree_delta(CompTree{t, DeltaMode::TwoArg}).total - (-11.2533)) < 1e-3;
  }

  // the documented discrepancy note must exist
  ok = ok && std::string(kTelescopingNote).find("-11.2534") != std::string::npos;

  gate.report(4, "delta calculus: collapse -4.6094, telescoping -11.2533 x15, note present",
              ok, ms_since(start));
}

void criterion5(Gate& gate) {
  auto start = Clock::now();
  std::string detail;
  bool ok = true;

  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<unsigned long> by_blocks;
    partitions_by_blocks(n, by_blocks);
    Nat total = 0;
    for (unsigned long k = 0; k < by_blocks.size(); ++k) {
      ok = ok && stirling2(n, k) == by_blocks[k];
      total += by_blocks[k];
    }
    ok = ok && bell(n) == total;
  }
  if (!ok) detail += "partition oracle mismatch; ";

  bool trees_ok = true;
  for (unsigned n = 1; n <= 5; ++n) {
    trees_ok = trees_ok && computation_count(n, ComputationKind::NonCommNonAssoc) ==
                               count_labeled_ordered_trees(n);
  }
  if (!trees_ok) detail += "ordered-tree oracle mismatch; ";
  ok = ok && trees_ok;

  // chain as specified: n!*C_{n-1} > B_n > 2^n > 1 for 4 <= n <= 8
  bool chain_ok = true;
  for (unsigned long n = 4; n <= 8; ++n) {
    Nat ncna = computation_count(n, ComputationKind::NonCommNonAssoc);
    Nat b = bell(n);
    Nat pow2 = Nat(1) << n;
    if (!(ncna > b && b > pow2 && pow2 > 1)) {
      chain_ok = false;
      detail += "chain fails at n=" + std::to_string(n) + ": bell=" + b.get_str(10) +
                " vs 2^n=" + pow2.get_str(10) + "; ";
    }
  }
  ok = ok && chain_ok;

  double ms = ms_since(start);
  ok = ok && ms < 10000.0;
  gate.report(5, "combinatorics oracles and counting chain 4..8 (< 10 s)", ok, ms, detail);
}

void criterion6(Gate& gate) {
  auto start = Clock::now();
  std::string detail;
  bool ok = true;

  for (unsigned long c : {2ul, 3ul, 100ul}) {
    auto spec = ElasticSpec::constant(c);
    bool chain_ok = true;
#pragma omp parallel for reduction(&& : chain_ok) schedule(dynamic, 256)
    for (long n = 0; n < 10000; ++n) {
      chain_ok = chain_ok && chain_backward(spec, chain_forward(spec, n)) == n;
    }
    ok = ok && chain_ok;
  }
  if (!ok) detail += "constant chain round trip failed; ";

  auto rx = ElasticSpec::polynomial(1, 1);
  std::set<unsigned long> occupied;
  for (unsigned long x = 0; x <= 33; ++x) {
    for (unsigned long y = 0; y <= 40; ++y) {
      Cell im = elastic_apply(rx, Cell{x, y});
      if (im.x <= 32) occupied.insert(im.x.get_ui());
    }
  }
  const std::set<unsigned long> expected{0,  1,  4,  5,  9,  10, 11, 16,
                                         17, 18, 19, 25, 26, 27, 28, 29};
  bool occ_ok = occupied == expected;
  for (unsigned long col = 12; col <= 15; ++col) occ_ok = occ_ok && !occupied.count(col);
  for (unsigned long col = 16; col <= 19; ++col) occ_ok = occ_ok && occupied.count(col);
  if (!occ_ok) detail += "occupancy set wrong; ";
  ok = ok && occ_ok;

  bool crux_ok = true;
  for (unsigned long c : {2ul, 10ul, 100ul}) {
    auto spec = ElasticSpec::constant(c);
    for (unsigned k = 10; k <= 40; ++k) {
      Nat x = Nat(1) << k;
      Cell im = elastic_apply(spec, Cell{x, x});
      crux_ok = crux_ok && (info(cantor_pair(im)) - 2.0 * info(x)) > 0.0;
    }
  }
  if (!crux_ok) detail += "positivity on the stretched diagonal failed; ";
  ok = ok && crux_ok;

  bool growth_ok = true;
  for (unsigned k = 8; k <= 20; ++k) {
    Nat x = Nat(1) << k;
    Cell im = elastic_apply(rx, Cell{x, x});
    growth_ok = growth_ok && (info(cantor_pair(im)) - 2.0 * info(x)) >= 2.0 * double(k) - 2.0;
  }
  if (!growth_ok) detail += "polynomial growth bound failed; ";
  ok = ok && growth_ok;

  gate.report(6, "elastic structure: chains, gaps, positivity, growth", ok, ms_since(start),
              detail);
}

void criterion7(Gate& gate) {
  auto start = Clock::now();
  std::string detail;
  bool ok = true;

  const auto sets = decode_canonical_range(0, 5000);
  for (auto key : {SortKey::sum(), SortKey::product()}) {
    // bucketed route: one streaming pass over the canonical enumeration
    std::map<Nat, Nat> buckets;
    std::vector<Nat> bucketed(sets.size());
    std::vector<bool> in_ground(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
      in_ground[i] = key.in_ground(sets[i]);
      if (!in_ground[i]) continue;
      Nat kv = zeta(key, sets[i]);
      bucketed[i] = buckets[kv];
      buckets[kv] += 1;
    }
    // literal route, per set
    bool agree = true;
#pragma omp parallel for reduction(&& : agree) schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(sets.size()); ++i) {
      if (!in_ground[i]) continue;
      agree = agree && theta_alg1(key, sets[i]) == bucketed[i];
    }
    // the per-set bucketed entry point matches its streaming construction
    for (size_t i = 0; i < sets.size(); i += 500) {
      if (!in_ground[i]) continue;
      agree = agree && theta_bucketed(key, sets[i]) == bucketed[i];
    }
    if (!agree) detail += "theta disagreement under " + key.label() + "; ";
    ok = ok && agree;
  }

  bool heights_ok = true;
  for (unsigned n = 1; n <= 30; ++n) {
    heights_ok = heights_ok && column_height(SortKey::sum(), n) == 2 * distinct_partitions(n);
  }
  if (!heights_ok) detail += "column height vs DP oracle failed; ";
  ok = ok && heights_ok;

  auto card = SortKey::cardinality();
  bool calib_ok = true;
#pragma omp parallel for reduction(&& : calib_ok) schedule(dynamic, 16)
  for (long i = 0; i < 2000; ++i) {
    SortedCell cell = phi_sorted(card, sets[static_cast<size_t>(i)]);
    calib_ok = calib_ok && cell.code == set_encode(sets[static_cast<size_t>(i)]);
  }
  if (!calib_ok) detail += "cardinality calibration failed; ";
  ok = ok && calib_ok;

  double ms = ms_since(start);
  ok = ok && ms < 60000.0;
  gate.report(7, "sorted injections: theta oracles x5000, heights, calibration (< 60 s)", ok,
              ms, detail);
}

void criterion8(Gate& gate) {
  auto start = Clock::now();
  std::string detail;

  bool ok = subset_sum_decide(FinSet::from_values({3, 4, 6, 7}), 20) &&
            subset_sum_decide(FinSet::from_values({2, 5, 6, 7}), 20);

  FinSet g = FinSet::from_values({3, 4, 6, 7});
  ok = ok && nth_subset_with_sum(g, 10, 1).value() == FinSet::from_values({4, 6});
  ok = ok && nth_subset_with_sum(g, 10, 2).value() == FinSet::from_values({3, 7});
  ok = ok && !nth_subset_with_sum(g, 10, 3).has_value();
  if (!ok) detail += "witness examples failed; ";

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(424242ul);
  std::vector<FinSet> grounds;
  for (int inst = 0; inst < 100; ++inst) {
    unsigned long size = Nat(rng.get_z_range(12)).get_ui() + 1;
    std::set<unsigned long> vals;
    while (vals.size() < size) vals.insert(Nat(rng.get_z_range(50)).get_ui() + 1);
    grounds.push_back(FinSet::from_values(std::vector<Nat>(vals.begin(), vals.end())));
  }

  bool agree = true;
#pragma omp parallel for reduction(&& : agree) schedule(dynamic)
  for (long inst = 0; inst < 100; ++inst) {
    const FinSet& ground = grounds[static_cast<size_t>(inst)];
    const auto& elems = ground.elements();
    // bitmask oracle: attainable sums
    std::set<Nat> attainable;
    for (uint32_t mask = 1; mask < (uint32_t(1) << elems.size()); ++mask) {
      Nat sum = 0;
      for (size_t i = 0; i < elems.size(); ++i) {
        if ((mask >> i) & 1) sum += elems[i];
      }
      attainable.insert(sum);
    }
    Nat total = 0;
    for (const Nat& e : elems) total += e;
    for (Nat t = 0; t <= total; t += 1) {
      agree = agree && subset_sum_decide(ground, t) == (attainable.count(t) > 0);
    }
  }
  if (!agree) detail += "bitmask disagreement; ";
  ok = ok && agree;

  gate.report(8, "subset sum: worked decisions, nth witnesses, 100 random instances", ok,
              ms_since(start), detail);
}

}  // namespace

int main() {
  Gate gate;
  criterion1(gate);
  criterion2(gate);
  criterion3(gate);
  criterion4(gate);
  criterion5(gate);
  criterion6(gate);
  criterion7(gate);
  criterion8(gate);

  if (gate.failed == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", gate.failed);
  }
  return gate.failed;
}
