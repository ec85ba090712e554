#include "infoplane/sorted.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "infoplane/cantor.hpp"
#include "infoplane/errors.hpp"
#include "infoplane/set_codec.hpp"

namespace infoplane {

SortKey::SortKey(Kind kind, Ground ground, std::vector<Nat> table)
    : kind_(kind), ground_(ground), table_(std::move(table)) {}

SortKey SortKey::cardinality() { return SortKey(Kind::Cardinality, Ground::NaturalsWithZero, {}); }

SortKey SortKey::sum(Ground ground) { return SortKey(Kind::Sum, ground, {}); }

SortKey SortKey::product() { return SortKey(Kind::Product, Ground::PositiveNaturals, {}); }

SortKey SortKey::product_with_zero() {
  return SortKey(Kind::Product, Ground::NaturalsWithZero, {});
}

SortKey SortKey::sum_under(std::vector<Nat> table) {
  if (table.empty()) throw std::invalid_argument("sum_under: empty table");
  for (size_t i = 0; i + 1 < table.size(); ++i) {
    if (table[i] >= table[i + 1]) {
      throw std::invalid_argument("sum_under: table must be strictly increasing");
    }
  }
  return SortKey(Kind::SumUnderF, Ground::PositiveNaturals, std::move(table));
}

std::string SortKey::label() const {
  switch (kind_) {
    case Kind::Cardinality:
      return "cardinality";
    case Kind::Sum:
      return ground_ == Ground::PositiveNaturals ? "sum(positive)" : "sum";
    case Kind::Product:
      return ground_ == Ground::PositiveNaturals ? "product" : "product(with-zero)";
    case Kind::SumUnderF:
      return "sum-under-f";
  }
  return "?";
}

bool SortKey::in_ground(const FinSet& s) const {
  if (s.empty()) return false;
  if (kind_ == Kind::SumUnderF) {
    return s.min() >= 1 && s.max() <= Nat(table_.size());
  }
  if (ground_ == Ground::PositiveNaturals) return s.min() >= 1;
  return true;
}

Nat zeta(const SortKey& key, const FinSet& s) {
  if (!key.in_ground(s)) {
    throw GroundViolation("zeta(" + key.label() + "): set {" + s.str() +
                          "} is outside the key's ground");
  }
  switch (key.kind()) {
    case SortKey::Kind::Cardinality:
      return Nat(s.size()) - 1;
    case SortKey::Kind::Sum: {
      Nat total = 0;
      for (const Nat& e : s.elements()) total += e;
      return total;
    }
    case SortKey::Kind::Product: {
      Nat total = 1;
      for (const Nat& e : s.elements()) total *= e;
      return total;
    }
    case SortKey::Kind::SumUnderF: {
      Nat total = 0;
      for (const Nat& e : s.elements()) total += key.table()[e.get_ui() - 1];
      return total;
    }
  }
  throw std::logic_error("zeta: unknown kind");
}

Nat theta_alg1_count(const SortKey& key, const FinSet& s) {
  const Nat target = zeta(key, s);
  const Nat stop = set_encode(s, CodecMode::Canonical);
  Nat matches = 0;
  for (Nat k = 0; k <= stop; k += 1) {
    FinSet t = set_decode(k, CodecMode::Canonical);
    if (key.in_ground(t) && zeta(key, t) == target) matches += 1;
  }
  return matches;
}

Nat theta_alg1(const SortKey& key, const FinSet& s) {
  return theta_alg1_count(key, s) - 1;
}

Nat theta_bucketed(const SortKey& key, const FinSet& s, Exec exec) {
  const Nat target = zeta(key, s);
  const Nat stop = set_encode(s, CodecMode::Canonical);
  if (!stop.fits_ulong_p()) {
    throw EnumerationCap("theta_bucketed: canonical index too large to stream");
  }
  const auto sets = decode_canonical_range(0, stop.get_ui(), exec);
  std::map<Nat, Nat> buckets;
  for (const FinSet& t : sets) {
    if (key.in_ground(t)) buckets[zeta(key, t)] += 1;
  }
  auto it = buckets.find(target);
  return it == buckets.end() ? Nat(0) : it->second;
}

SortedCell phi_sorted(const SortKey& key, const FinSet& s, Exec exec) {
  Nat kv = zeta(key, s);
  Nat th = theta_bucketed(key, s, exec);
  Nat code = cantor_pair(kv, th);
  return SortedCell{std::move(kv), std::move(th), std::move(code)};
}

std::vector<SortedRow> sorted_survey(const SortKey& key, size_t first_n, Exec exec) {
  const auto sets = decode_canonical_range(0, first_n, exec);
  std::vector<SortedRow> rows;
  rows.reserve(first_n);
  std::map<Nat, Nat> buckets;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (!key.in_ground(sets[i])) continue;
    Nat kv = zeta(key, sets[i]);
    Nat th = buckets[kv];
    buckets[kv] += 1;
    Nat code = cantor_pair(kv, th);
    rows.push_back(SortedRow{Nat(static_cast<unsigned long>(i)), sets[i], std::move(kv),
                             std::move(th), std::move(code)});
  }
  return rows;
}

namespace {

struct CountCap {
  const Nat& cap;
  unsigned long count = 0;

  void bump() {
    count += 1;
    if (cap > 0 && Nat(count) > cap) {
      throw EnumerationCap("column_height: count exceeded the cap");
    }
  }
};

unsigned long as_enumerable_ulong(const Nat& value) {
  if (!value.fits_ulong_p()) {
    throw EnumerationCap("column_height: value too large to enumerate");
  }
  return value.get_ui();
}

// Sets of distinct positive parts >= min_part summing to `remaining`.
// Parts above (remaining - 1) / 2 can only finish the set, so the branch
// loop stops there.
void count_sum_sets(unsigned long remaining, unsigned long min_part, CountCap& cc) {
  if (remaining >= min_part) cc.bump();  // {remaining} closes the set
  for (unsigned long p = min_part; 2 * p + 1 <= remaining; ++p) {
    count_sum_sets(remaining - p, p + 1, cc);
  }
}

// Sets of distinct factors >= min_f multiplying to `remaining`. Branch
// factors stop at sqrt(remaining); the residual factor closes the set.
void count_product_sets(unsigned long remaining, unsigned long min_f, CountCap& cc) {
  if (remaining >= min_f) cc.bump();
  for (unsigned long f = min_f; f * f <= remaining; ++f) {
    if (remaining % f == 0) count_product_sets(remaining / f, f + 1, cc);
  }
}

// Index sets (ascending, from min_idx) whose table values sum to `remaining`.
void count_table_sets(const std::vector<Nat>& table, size_t min_idx, const Nat& remaining,
                      CountCap& cc) {
  for (size_t i = min_idx; i < table.size(); ++i) {
    const Nat& v = table[i];
    if (v > remaining) break;  // strictly increasing table
    if (v == remaining) {
      cc.bump();
    } else {
      count_table_sets(table, i + 1, remaining - v, cc);
    }
  }
}

}  // namespace

Nat column_height(const SortKey& key, const Nat& value, const Nat& cap) {
  if (value < 0) throw std::invalid_argument("column_height: negative value");
  CountCap cc{cap};
  switch (key.kind()) {
    case SortKey::Kind::Cardinality:
      throw InfiniteColumn("column_height: every cardinality column is infinite");
    case SortKey::Kind::Sum: {
      const bool with_zero = key.ground() == Ground::NaturalsWithZero;
      if (value == 0) return with_zero ? 1 : 0;  // only {0}
      count_sum_sets(as_enumerable_ulong(value), 1, cc);
      return with_zero ? Nat(2 * cc.count) : Nat(cc.count);  // optionally adjoin 0
    }
    case SortKey::Kind::Product: {
      if (key.ground() == Ground::NaturalsWithZero && value == 0) {
        throw InfiniteColumn("column_height: product column 0 is infinite over a ground with 0");
      }
      if (value == 0) return 0;
      if (value == 1) return 1;  // only {1}
      count_product_sets(as_enumerable_ulong(value), 2, cc);
      return Nat(2 * cc.count);  // optionally adjoin 1
    }
    case SortKey::Kind::SumUnderF: {
      count_table_sets(key.table(), 0, value, cc);
      return Nat(cc.count);
    }
  }
  throw std::logic_error("column_height: unknown kind");
}

std::vector<DensityPoint> density_profile(const SortKey& key, size_t survey_limit, Exec exec) {
  const auto rows = sorted_survey(key, survey_limit, exec);
  std::vector<Nat> codes;
  codes.reserve(rows.size());
  for (const auto& r : rows) codes.push_back(r.code);
  std::sort(codes.begin(), codes.end());

  std::vector<DensityPoint> points;
  points.reserve(survey_limit);
  size_t covered = 0;
  for (size_t n = 0; n < survey_limit; ++n) {
    while (covered < codes.size() && codes[covered] <= Nat(static_cast<unsigned long>(n))) {
      ++covered;
    }
    points.push_back(
        DensityPoint{Nat(static_cast<unsigned long>(n)), Nat(static_cast<unsigned long>(covered))});
  }
  return points;
}

namespace {

constexpr size_t kMaxSubsetGround = 24;

// Masks over m ground elements, ordered by the canonical index of the
// index-set each mask selects. Built once per m; immutable afterwards.
const std::vector<uint32_t>& canonical_mask_order(size_t m) {
  static std::mutex mu;
  static std::map<size_t, std::vector<uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<Nat, uint32_t>> ranked;
  ranked.reserve((size_t(1) << m) - 1);
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    std::vector<Nat> idx;
    for (size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) idx.push_back(Nat(static_cast<unsigned long>(i)));
    }
    ranked.emplace_back(set_encode(FinSet::from_sorted(std::move(idx))), mask);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<uint32_t> order;
  order.reserve(ranked.size());
  for (const auto& [code, mask] : ranked) order.push_back(mask);
  return cache.emplace(m, std::move(order)).first->second;
}

// Subset sums by mask, sums[mask] = sum of selected ground elements.
std::vector<Nat> subset_sums(const std::vector<Nat>& elems) {
  const size_t m = elems.size();
  std::vector<Nat> sums(size_t(1) << m);
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    const uint32_t low = mask & (mask - 1);
    const int bit = __builtin_ctz(mask);
    sums[mask] = sums[low] + elems[static_cast<size_t>(bit)];
  }
  return sums;
}

void check_ground_size(const FinSet& ground) {
  if (ground.empty()) throw EmptySetError("subset sum: empty ground set");
  if (ground.size() > kMaxSubsetGround) {
    throw EnumerationCap("subset sum: ground capped at 24 elements");
  }
}

}  // namespace

bool subset_sum_decide(const FinSet& ground, const Nat& target) {
  check_ground_size(ground);
  const auto sums = subset_sums(ground.elements());
  for (uint32_t mask : canonical_mask_order(ground.size())) {
    if (sums[mask] == target) return true;
  }
  return false;
}

bool subset_sum_decide(const SortKey& sum_under_key, const Nat& target) {
  if (sum_under_key.kind() != SortKey::Kind::SumUnderF) {
    throw std::invalid_argument("subset_sum_decide: key must be sum-under-f");
  }
  return subset_sum_decide(FinSet::from_sorted(sum_under_key.table()), target);
}

std::optional<FinSet> nth_subset_with_sum(const FinSet& ground, const Nat& target,
                                          const Nat& n) {
  if (n < 1) throw std::invalid_argument("nth_subset_with_sum: n must be >= 1");
  check_ground_size(ground);
  const auto& elems = ground.elements();
  const auto sums = subset_sums(elems);
  Nat seen = 0;
  for (uint32_t mask : canonical_mask_order(ground.size())) {
    if (sums[mask] != target) continue;
    seen += 1;
    if (seen == n) {
      std::vector<Nat> chosen;
      for (size_t i = 0; i < elems.size(); ++i) {
        if ((mask >> i) & 1) chosen.push_back(elems[i]);
      }
      return FinSet::from_sorted(std::move(chosen));
    }
  }
  return std::nullopt;
}

}  // namespace infoplane
