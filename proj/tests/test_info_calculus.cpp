#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "infoplane/combinadics.hpp"
#include "infoplane/errors.hpp"
#include "infoplane/info_calculus.hpp"

using namespace infoplane;

namespace {

std::vector<Bits> sorted_per_node(const TreePtr& t, DeltaMode mode) {
  auto rep = tree_delta(CompTree{t, mode});
  std::sort(rep.per_node.begin(), rep.per_node.end());
  return rep.per_node;
}

}  // namespace

TEST_CASE("delta_add") {
  CHECK(delta_add(2, 98) == doctest::Approx(-0.97).epsilon(0.01));
  CHECK(delta_add(100, 100, DeltaMode::Collapse) == 1.0);
  CHECK(delta_add(47, 53) == doctest::Approx(-4.6386).epsilon(1e-3));
  // commutative, exactly
  CHECK(delta_add(7, 19) == delta_add(19, 7));
  CHECK(delta_add(7, 19, DeltaMode::Collapse) == delta_add(19, 7, DeltaMode::Collapse));
}

TEST_CASE("delta_mul") {
  CHECK(std::abs(delta_mul(7, 6)) < 1e-12);
  CHECK(delta_mul(5, 5, DeltaMode::Collapse) == doctest::Approx(std::log2(5.0)).epsilon(1e-12));
  CHECK(delta_mul(1, 9) == 0.0);
  CHECK(delta_mul(12, 35) == delta_mul(35, 12));
}

TEST_CASE("tree_delta on the worked bracketing") {
  TreePtr t = parse_expression("(2+98)+(47+53)");
  auto collapse = tree_delta(CompTree{t, DeltaMode::Collapse});
  CHECK(collapse.result == 200);
  CHECK(collapse.total == doctest::Approx(-4.6094).epsilon(1e-3));
  REQUIRE(collapse.per_node.size() == 3);
  CHECK(collapse.per_node[0] == doctest::Approx(-0.9708).epsilon(1e-3));
  CHECK(collapse.per_node[1] == doctest::Approx(-4.6386).epsilon(1e-3));
  CHECK(collapse.per_node[2] == 1.0);

  auto two_arg = tree_delta(CompTree{t, DeltaMode::TwoArg});
  CHECK(two_arg.total == doctest::Approx(-11.2533).epsilon(1e-3));
}

TEST_CASE("two-arg addition totals telescope for every bracketing") {
  const std::vector<Nat> vals{2, 47, 53, 98};
  Nat total = 0;
  Bits leaf_info = 0.0;
  for (const Nat& v : vals) {
    total += v;
    leaf_info += info(v);
  }
  const Bits expected = info(total) - leaf_info;

  auto trees = enumerate_trees(vals, OpKind::Add);
  CHECK(trees.size() == 15);
  for (const auto& t : trees) {
    auto rep = tree_delta(CompTree{t, DeltaMode::TwoArg});
    CHECK(rep.result == total);
    CHECK(std::abs(rep.total - expected) < 1e-9);
  }

  // Per-node deltas are where associativity breaks: some pair of trees has
  // different per-node multisets.
  bool found_different = false;
  auto base = sorted_per_node(trees[0], DeltaMode::TwoArg);
  for (size_t i = 1; i < trees.size() && !found_different; ++i) {
    auto other = sorted_per_node(trees[i], DeltaMode::TwoArg);
    for (size_t j = 0; j < base.size(); ++j) {
      if (std::abs(base[j] - other[j]) > 1e-9) found_different = true;
    }
  }
  CHECK(found_different);
}

TEST_CASE("multiplication trees are information conserving node by node") {
  auto trees = enumerate_trees({2, 3, 5, 7, 11}, OpKind::Mul);
  for (const auto& t : trees) {
    auto rep = tree_delta(CompTree{t, DeltaMode::TwoArg});
    for (Bits b : rep.per_node) CHECK(std::abs(b) < 1e-9);
    CHECK(rep.result == 2 * 3 * 5 * 7 * 11);
  }
}

TEST_CASE("spectrum of {2,47,53,98}") {
  auto two_arg = delta_spectrum({2, 47, 53, 98}, OpKind::Add, DeltaMode::TwoArg);
  REQUIRE(two_arg.size() == 1);
  CHECK(two_arg[0].total == doctest::Approx(-11.2533).epsilon(1e-3));
  CHECK(two_arg[0].multiplicity == 15);

  auto collapse = delta_spectrum({2, 47, 53, 98}, OpKind::Add, DeltaMode::Collapse);
  REQUIRE(collapse.size() >= 2);
  bool has_tele = false, has_collapsed = false;
  for (const auto& line : collapse) {
    if (std::abs(line.total - (-11.2533)) < 1e-3) has_tele = true;
    if (std::abs(line.total - (-4.6094)) < 1e-3) has_collapsed = true;
  }
  CHECK(has_tele);
  CHECK(has_collapsed);
}

TEST_CASE("two-element multiplication spectrum is {0}") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 4}, {1, 9}, {17, 17}}) {
    auto sp = delta_spectrum({Nat(a), Nat(b)}, OpKind::Mul, DeltaMode::TwoArg);
    REQUIRE(sp.size() == 1);
    CHECK(std::abs(sp[0].total) < 1e-9);
  }
}

TEST_CASE("spectrum size limit") {
  std::vector<Nat> nine(9, Nat(2));
  CHECK_THROWS_AS(delta_spectrum(nine, OpKind::Add, DeltaMode::TwoArg), SizeLimit);
}

TEST_CASE("unordered tree count scales to the non-commutative count") {
  // distinct leaves: each unordered tree stands for 2^(n-1) ordered ones
  for (unsigned n = 2; n <= 5; ++n) {
    std::vector<Nat> vals;
    for (unsigned i = 0; i < n; ++i) vals.push_back(10 + i);
    auto unordered = enumerate_trees(vals, OpKind::Add, /*ordered=*/false);
    auto ordered = enumerate_trees(vals, OpKind::Add, /*ordered=*/true);
    CHECK(Nat(ordered.size()) == computation_count(n, ComputationKind::NonCommNonAssoc));
    CHECK(Nat(unordered.size()) * (Nat(1) << (n - 1)) == Nat(ordered.size()));
  }
}

TEST_CASE("primitive deltas") {
  CHECK(primitive::successor(1) == 1.0);
  CHECK(primitive::successor(0) == 0.0);
  CHECK(primitive::successor(1000) > 0.0);
  CHECK(primitive::successor(1000) < primitive::successor(100));
  CHECK(primitive::constant() == 0.0);
  CHECK(primitive::composition() == 0.0);
  CHECK(primitive::prim_recursion() == 0.0);

  // projection discards the rest of the tuple
  std::vector<Nat> tuple{8, 16, 32};
  CHECK(primitive::projection(2, tuple) ==
        doctest::Approx(4.0 - 1.0 - (3.0 + 4.0 + 5.0)).epsilon(1e-12));
  CHECK(primitive::projection(1, tuple) < 0.0);
  CHECK_THROWS(primitive::projection(4, tuple));
}

TEST_CASE("expression parser") {
  auto t = parse_expression(" ( (2+98) + (47+53) ) ");
  CHECK(tree_delta(CompTree{t, DeltaMode::TwoArg}).result == 200);

  auto prec = parse_expression("2+3*4");
  auto rep = tree_delta(CompTree{prec, DeltaMode::TwoArg});
  CHECK(rep.result == 14);
  REQUIRE(rep.per_node.size() == 2);  // mul below add

  // left association: 1+2+3 = (1+2)+3
  auto chain = parse_expression("1+2+3");
  auto chain_rep = tree_delta(CompTree{chain, DeltaMode::TwoArg});
  CHECK(chain_rep.result == 6);
  CHECK(chain_rep.per_node[0] ==
        doctest::Approx(delta_add(1, 2)).epsilon(1e-12));

  CHECK_THROWS_AS(parse_expression("2+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("(2+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("2 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("-4"), std::invalid_argument);
}

TEST_CASE("telescoping note is available to tooling") {
  CHECK(std::string(kTelescopingNote).size() > 100);
}
