#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "thinset/prefix.hpp"
#include "thinset/set_expr.hpp"

namespace thinset {

// Finite sequence over {0, 1}.
class BitString {
public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);
  static BitString parse(std::string_view text);  // e.g. "010"

  i64 size() const { return static_cast<i64>(bits_.size()); }
  int bit(i64 index) const { return bits_[static_cast<std::size_t>(index)]; }
  BitString prefix(i64 length) const;
  BitString extended(int bit) const;
  std::string to_string() const;

  // sum of bit_j * 2^j over the stored bits; the offset of the node's
  // residue class below the multiples of 2^size.
  i64 offset_value() const;

private:
  std::vector<std::uint8_t> bits_;
};

// node(s) = {m * 2^|s| - offset(s) : m >= 1}, the binary-splitting family
// whose children halve each class by parity.
SetExpr tree_node(const BitString& s);

struct TreeFamily {
  std::function<SetExpr(const BitString&)> node;
};

TreeFamily dyadic_family();

struct TreeViolation {
  std::string condition;  // "root-covers", "children-cover", "children-disjoint"
  std::string node;
  i64 witness = 0;
};

struct TreeConditionReport {
  bool all_pass = true;
  i64 depth = 0;
  i64 horizon = 0;
  i64 nodes_checked = 0;
  std::vector<TreeViolation> violations;
};

// Checks, on prefixes to the horizon: the root covers every positive integer,
// each node is the disjoint union of its two children.
TreeConditionReport verify_tree_conditions(const TreeFamily& family, i64 depth,
                                           i64 horizon);

struct BranchStep {
  SetExpr node;        // the class at this depth along the branch
  SetExpr difference;  // what the next step removes (the sibling child)
};

// For each proper prefix of x: the node and the residue class it loses when
// descending; the differences are pairwise disjoint.
std::vector<BranchStep> branch_chain(const BitString& x);

// Union over k of the first segment_lengths[k] members of the k-th branch
// difference; errors when the horizon cannot hold a requested segment.
Prefix build_ar_set(const BitString& x, const std::vector<i64>& segment_lengths,
                    i64 horizon);

struct Case1Result {
  Prefix witness;
  std::vector<std::vector<i64>> runs;
};

// B_0 = {1}; B_j = the earliest run of j consecutive members of
// node(x|_j) with successive differences <= max_gap placed after B_{j-1}.
// The union contains runs of every length up to |x|.
Case1Result case1_witness(const TreeFamily& family, const BitString& x,
                          i64 max_gap, i64 horizon);

}  // namespace thinset
