#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thinset/prefix.hpp"
#include "thinset/set_expr.hpp"
#include "thinset/thinness.hpp"

namespace thinset {

// Decomposes S union T into blocks of size <= 3: each s gets the nearest
// eligible T neighbors on both sides of the midpoints towards its neighbor
// elements; every other T element stays a singleton.
BlockDecomposition merge_super_thin(const Prefix& s, const Prefix& t,
                                    i64 horizon);

// Decomposes (union of s_blocks) union T into blocks of size <= 2M + 1 where
// M is the block size bound of s_blocks. Boundary T elements attach by the
// same midpoint rule, interior T elements join their surrounding block, and
// blocks are re-split so that no two T elements share a block without an
// S element between them.
BlockDecomposition merge_very_thin_super_thin(const BlockDecomposition& s_blocks,
                                              const Prefix& t, i64 horizon);

// Splits a bounded-block decomposition into block_size_max parts, the i-th
// part collecting the i-th smallest element of every block (short blocks
// padded by repeating their maximum; duplicates kept in the lowest part).
std::vector<Prefix> split_into_super_thin(const BlockDecomposition& decomposition);

struct CoverStage {
  i64 k = 0;       // stage number
  i64 index = 0;   // selected 1-based element index n_k
  i64 anchor = 0;  // t_{n_k}
  i64 next = 0;    // t_{n_k + 1}
  std::vector<i64> a_block;  // {anchor, ..., anchor + k} clipped
  std::vector<i64> b_block;  // {next - k, ..., next} clipped
};

struct CoverResult {
  Prefix a_prime;
  Prefix b_prime;
  std::vector<CoverStage> stages;
};

// Writes S as the intersection of two supersets that both contain runs of
// every length realized by the stages (so neither superset is very thin),
// with a_prime intersect b_prime == S exactly.
CoverResult thin_intersection_cover(const Prefix& s, i64 horizon);

// Named example sets with their certificates.
SetExpr gallery(const std::string& name);
std::vector<std::pair<std::string, std::string>> gallery_entries();

}  // namespace thinset
