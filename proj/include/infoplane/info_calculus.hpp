#pragma once

#include <memory>
#include <string>
#include <vector>

#include "infoplane/nat.hpp"

namespace infoplane {

enum class OpKind { Add, Mul };

enum class DeltaMode {
  /// Every node pays info(out) - info(a) - info(b), no exceptions.
  TwoArg,
  /// Equal operands collapse to a single input: an add node with a = b
  /// yields exactly 1 bit, a mul node with a = b yields info(a).
  Collapse,
};

/// Per-operation information efficiency.
Bits delta_add(const Nat& x, const Nat& y, DeltaMode mode = DeltaMode::TwoArg);
Bits delta_mul(const Nat& x, const Nat& y, DeltaMode mode = DeltaMode::TwoArg);

/// Binary computation tree over naturals. Nodes are immutable and shared,
/// so enumeration over bracketings stays cheap.
struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

struct TreeNode {
  // Leaf when left and right are both null.
  OpKind op = OpKind::Add;
  Nat value;  // leaf payload; unused on internal nodes
  TreePtr left;
  TreePtr right;

  bool is_leaf() const { return !left; }
};

TreePtr leaf(Nat value);
TreePtr node(OpKind op, TreePtr l, TreePtr r);

/// A computation tree together with the delta-evaluation convention it is
/// analysed under.
struct CompTree {
  TreePtr root;
  DeltaMode mode = DeltaMode::TwoArg;
};

struct DeltaReport {
  std::vector<Bits> per_node;  // one per internal node, post-order
  Bits total = 0.0;            // sum of per_node
  Nat result;                  // arithmetic value of the tree
};

/// Evaluates the tree bottom-up; each internal node contributes the delta
/// of its operation applied to the child values.
DeltaReport tree_delta(const CompTree& t);

/// All distinct binary computation trees over a multiset of values under a
/// single operator. `ordered` distinguishes left/right children (the
/// non-commutative count); unordered treats children as a pair.
/// Throws SizeLimit above 8 values.
std::vector<TreePtr> enumerate_trees(const std::vector<Nat>& values, OpKind op,
                                     bool ordered = false);

struct SpectrumLine {
  Bits total;
  Nat multiplicity;  // number of distinct trees sharing this total
};

/// Distinct tree totals over all unordered bracketings of the multiset,
/// ascending, grouped with tolerance 1e-9 (trees that telescope to the
/// same total differ only in summation order). Throws SizeLimit above 8.
std::vector<SpectrumLine> delta_spectrum(const std::vector<Nat>& values, OpKind op,
                                         DeltaMode mode);

/// Deltas of the primitive building blocks.
namespace primitive {

/// info(x + 1) - info(x): positive, tending to 0; exactly 0 at x = 0.
Bits successor(const Nat& x);

/// A constant carries no information.
Bits constant();

/// Projection onto the i-th coordinate (1-based) of a tuple:
/// info(x_i) - log2(i) - sum_j info(x_j).
Bits projection(const Nat& i, const std::vector<Nat>& tuple);

/// Composition and primitive recursion are information neutral: their
/// delta is the sum of the deltas of the pieces, so the constructs
/// themselves contribute nothing.
Bits composition();
Bits prim_recursion();

}  // namespace primitive

/// Parses an expression over non-negative integer literals, '+', '*' and
/// parentheses into a computation tree. '*' binds tighter than '+', both
/// left-associative. Throws std::invalid_argument on malformed input.
TreePtr parse_expression(const std::string& text);

/// Why the two-argument totals of every addition bracketing coincide, and
/// why hand-rounded tables disagree. Kept as data so tooling can surface it
/// next to spectrum output.
extern const char* const kTelescopingNote;

}  // namespace infoplane
