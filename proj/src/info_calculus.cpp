#include "infoplane/info_calculus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "infoplane/errors.hpp"

namespace infoplane {

const char* const kTelescopingNote =
    "Under two-argument evaluation the total delta of every addition "
    "bracketing telescopes to info(sum) - sum(info(leaf)): per-node deltas "
    "differ between bracketings, totals cannot. Worked tables that keep "
    "only two decimals per logarithm (printing totals like -12.17, -10.26 "
    "or -11.31 for the {2,47,53,98} family) drift from the exact total "
    "-11.2534 and from each other; the double-precision evaluation here is "
    "authoritative. Collapse mode is the one convention that genuinely "
    "separates bracketings: an equal-operand addition contributes +1 bit "
    "instead of the two-argument value.";

Bits delta_add(const Nat& x, const Nat& y, DeltaMode mode) {
  if (mode == DeltaMode::Collapse && x == y) return 1.0;  // log2(2x) - log2(x)
  return info(x + y) - info(x) - info(y);
}

Bits delta_mul(const Nat& x, const Nat& y, DeltaMode mode) {
  if (mode == DeltaMode::Collapse && x == y) return info(x);  // log2(x^2) - log2(x)
  return info(x * y) - info(x) - info(y);
}

TreePtr leaf(Nat value) {
  auto n = std::make_shared<TreeNode>();
  n->value = std::move(value);
  return n;
}

TreePtr node(OpKind op, TreePtr l, TreePtr r) {
  if (!l || !r) throw std::invalid_argument("node: internal node needs two children");
  auto n = std::make_shared<TreeNode>();
  n->op = op;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

namespace {

Nat eval_value(const TreeNode& n) {
  if (n.is_leaf()) return n.value;
  Nat l = eval_value(*n.left);
  Nat r = eval_value(*n.right);
  return n.op == OpKind::Add ? Nat(l + r) : Nat(l * r);
}

Nat walk_delta(const TreeNode& n, DeltaMode mode, std::vector<Bits>& per_node) {
  if (n.is_leaf()) return n.value;
  Nat l = walk_delta(*n.left, mode, per_node);
  Nat r = walk_delta(*n.right, mode, per_node);
  if (n.op == OpKind::Add) {
    per_node.push_back(delta_add(l, r, mode));
    return l + r;
  }
  per_node.push_back(delta_mul(l, r, mode));
  return l * r;
}

}  // namespace

DeltaReport tree_delta(const CompTree& t) {
  if (!t.root) throw std::invalid_argument("tree_delta: empty tree");
  DeltaReport report;
  report.result = walk_delta(*t.root, t.mode, report.per_node);
  Bits total = 0.0;
  for (Bits b : report.per_node) total += b;
  report.total = total;
  return report;
}

namespace {

constexpr size_t kMaxSpectrumLeaves = 8;

using ValueVec = std::vector<Nat>;

// Enumerates every distinct tree over the sorted multiset `values`.
// Memoised per sub-multiset; sub-multisets are keyed by their sorted
// element vector. Splits at each level are deduplicated the same way.
struct TreeEnumerator {
  bool ordered;
  std::map<ValueVec, std::vector<TreePtr>> memo;
  OpKind op;

  const std::vector<TreePtr>& trees(const ValueVec& values) {
    auto it = memo.find(values);
    if (it != memo.end()) return it->second;

    std::vector<TreePtr> out;
    const size_t n = values.size();
    if (n == 1) {
      out.push_back(leaf(values[0]));
      return memo.emplace(values, std::move(out)).first->second;
    }

    // Distinct sub-multiset splits; for the unordered variant keep one
    // representative of {A, B} with A <= B.
    std::map<std::pair<ValueVec, ValueVec>, bool> splits;
    for (size_t mask = 1; mask + 1 < (size_t(1) << n); ++mask) {
      ValueVec a, b;
      for (size_t i = 0; i < n; ++i) {
        ((mask >> i) & 1 ? a : b).push_back(values[i]);
      }
      if (!ordered && b < a) std::swap(a, b);
      splits.emplace(std::make_pair(std::move(a), std::move(b)), true);
    }

    for (const auto& [split, unused] : splits) {
      (void)unused;
      const auto& lefts = trees(split.first);
      const auto& rights = trees(split.second);
      const bool halves_equal = !ordered && split.first == split.second;
      for (size_t i = 0; i < lefts.size(); ++i) {
        const size_t j0 = halves_equal ? i : 0;
        for (size_t j = j0; j < rights.size(); ++j) {
          out.push_back(node(op, lefts[i], rights[j]));
        }
      }
    }
    return memo.emplace(values, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<TreePtr> enumerate_trees(const std::vector<Nat>& values, OpKind op,
                                     bool ordered) {
  if (values.empty()) throw std::invalid_argument("enumerate_trees: no values");
  if (values.size() > kMaxSpectrumLeaves) {
    throw SizeLimit("enumerate_trees: exhaustive enumeration capped at 8 values");
  }
  ValueVec sorted = values;
  std::sort(sorted.begin(), sorted.end());
  TreeEnumerator e{ordered, {}, op};
  return e.trees(sorted);
}

std::vector<SpectrumLine> delta_spectrum(const std::vector<Nat>& values, OpKind op,
                                         DeltaMode mode) {
  const std::vector<TreePtr> trees = enumerate_trees(values, op, /*ordered=*/false);

  std::vector<Bits> totals(trees.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(trees.size()); ++i) {
    totals[i] = tree_delta(CompTree{trees[i], mode}).total;
  }

  std::sort(totals.begin(), totals.end());
  std::vector<SpectrumLine> lines;
  constexpr Bits kGroupTol = 1e-9;
  for (Bits t : totals) {
    if (!lines.empty() && t - lines.back().total <= kGroupTol) {
      lines.back().multiplicity += 1;
    } else {
      lines.push_back(SpectrumLine{t, 1});
    }
  }
  return lines;
}

namespace primitive {

Bits successor(const Nat& x) { return info(x + 1) - info(x); }

Bits constant() { return 0.0; }

Bits projection(const Nat& i, const std::vector<Nat>& tuple) {
  if (i < 1 || i > Nat(tuple.size())) {
    throw std::invalid_argument("projection: index out of range");
  }
  Bits tuple_info = 0.0;
  for (const Nat& x : tuple) tuple_info += info(x);
  return info(tuple[i.get_ui() - 1]) - log2_nat(i) - tuple_info;
}

Bits composition() { return 0.0; }

Bits prim_recursion() { return 0.0; }

}  // namespace primitive

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression: " + what + " at offset " +
                                std::to_string(pos));
  }

  TreePtr parse_sum() {
    TreePtr left = parse_product();
    while (eat('+')) left = node(OpKind::Add, left, parse_product());
    return left;
  }

  TreePtr parse_product() {
    TreePtr left = parse_atom();
    while (eat('*')) left = node(OpKind::Mul, left, parse_atom());
    return left;
  }

  TreePtr parse_atom() {
    skip_ws();
    if (eat('(')) {
      TreePtr inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer or '('");
    return leaf(Nat(text.substr(start, pos - start), 10));
  }
};

}  // namespace

TreePtr parse_expression(const std::string& text) {
  Parser p{text};
  TreePtr root = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return root;
}

}  // namespace infoplane
