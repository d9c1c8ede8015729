#include "thinset/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

void require_horizon(i64 actual, i64 expected, const char* what) {
  if (actual != expected)
    throw DomainError(std::string("horizon mismatch: ") + what + " is at " +
                      std::to_string(actual) + ", expected " +
                      std::to_string(expected));
}

std::vector<i64> without(const std::vector<i64>& values,
                         const std::vector<i64>& removed) {
  std::vector<i64> out;
  std::set_difference(values.begin(), values.end(), removed.begin(),
                      removed.end(), std::back_inserter(out));
  return out;
}

// Smallest t with lo <= t and 2t <= doubled_hi, or nullopt.
std::optional<i64> smallest_in(const std::vector<i64>& t, i64 lo,
                               i64 doubled_hi) {
  const auto it = std::lower_bound(t.begin(), t.end(), lo);
  if (it == t.end() || 2 * *it > doubled_hi) return std::nullopt;
  return *it;
}

// Largest t with t <= hi and 2t > doubled_lo, or nullopt.
std::optional<i64> largest_in(const std::vector<i64>& t, i64 doubled_lo,
                              i64 hi) {
  auto it = std::upper_bound(t.begin(), t.end(), hi);
  if (it == t.begin()) return std::nullopt;
  --it;
  if (2 * *it <= doubled_lo) return std::nullopt;
  return *it;
}

std::vector<std::vector<i64>> sorted_with_leftovers(
    std::vector<std::vector<i64>> blocks, const std::vector<i64>& t,
    const std::vector<bool>& used) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!used[i]) blocks.push_back({t[i]});
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

BlockDecomposition merge_super_thin(const Prefix& s, const Prefix& t,
                                    i64 horizon) {
  require_horizon(s.horizon(), horizon, "S");
  require_horizon(t.horizon(), horizon, "T");
  const std::vector<i64>& sv = s.elements();
  const std::vector<i64> tv = without(t.elements(), sv);
  std::vector<bool> used(tv.size(), false);

  const auto mark_used = [&](i64 value) {
    const auto it = std::lower_bound(tv.begin(), tv.end(), value);
    used[it - tv.begin()] = true;
  };

  std::vector<std::vector<i64>> blocks;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    std::vector<i64> block;
    // Largest t in [(s_{i-1}+s_i)/2, s_i], the midpoint excluded (midpoint
    // ties attach to the earlier block).
    if (i > 0) {
      if (const auto left = largest_in(tv, sv[i - 1] + sv[i], sv[i])) {
        block.push_back(*left);
        mark_used(*left);
      }
    }
    block.push_back(sv[i]);
    // Smallest t in [s_i, (s_i+s_{i+1})/2].
    if (i + 1 < sv.size()) {
      if (const auto right = smallest_in(tv, sv[i], sv[i] + sv[i + 1])) {
        block.push_back(*right);
        mark_used(*right);
      }
    }
    blocks.push_back(std::move(block));
  }

  return decomposition_from_blocks(sorted_with_leftovers(std::move(blocks), tv, used),
                                   horizon);
}

BlockDecomposition merge_very_thin_super_thin(const BlockDecomposition& s_blocks,
                                              const Prefix& t, i64 horizon) {
  require_horizon(s_blocks.horizon, horizon, "S decomposition");
  require_horizon(t.horizon(), horizon, "T");
  if (s_blocks.blocks.empty())
    throw DomainError("merge: empty S decomposition");

  const std::vector<i64> s_flat = s_blocks.flatten();
  const std::vector<i64> tv = without(t.elements(), s_flat);
  std::vector<bool> used(tv.size(), false);
  const auto mark_used = [&](i64 value) {
    const auto it = std::lower_bound(tv.begin(), tv.end(), value);
    used[it - tv.begin()] = true;
  };

  const i64 size_bound = 2 * s_blocks.block_size_max + 1;
  const auto& sb = s_blocks.blocks;

  std::vector<std::vector<i64>> result_blocks;
  for (std::size_t i = 0; i < sb.size(); ++i) {
    std::vector<i64> merged = sb[i];
    if (i > 0) {
      if (const auto left =
              largest_in(tv, sb[i - 1].back() + sb[i].front(), sb[i].front())) {
        merged.push_back(*left);
        mark_used(*left);
      }
    }
    if (i + 1 < sb.size()) {
      if (const auto right =
              smallest_in(tv, sb[i].back(), sb[i].back() + sb[i + 1].front())) {
        merged.push_back(*right);
        mark_used(*right);
      }
    }
    // Interior T elements (strictly inside the block's span).
    const auto lo = std::upper_bound(tv.begin(), tv.end(), sb[i].front());
    const auto hi = std::lower_bound(tv.begin(), tv.end(), sb[i].back());
    for (auto it = lo; it != hi; ++it) {
      merged.push_back(*it);
      used[it - tv.begin()] = true;
    }
    std::sort(merged.begin(), merged.end());

    // Re-split: two T elements may share a block only with an S element
    // between them. Greedy left-to-right; every cut ends on a T element and
    // starts the next chunk on a T element.
    std::vector<i64> chunk;
    bool chunk_has_t = false;
    bool s_since_last_t = false;
    const auto is_s = [&](i64 value) {
      return std::binary_search(sb[i].begin(), sb[i].end(), value);
    };
    for (i64 value : merged) {
      if (is_s(value)) {
        chunk.push_back(value);
        if (chunk_has_t) s_since_last_t = true;
        continue;
      }
      if (chunk_has_t && !s_since_last_t) {
        result_blocks.push_back(std::move(chunk));
        chunk = {value};
      } else {
        chunk.push_back(value);
      }
      chunk_has_t = true;
      s_since_last_t = false;
    }
    if (!chunk.empty()) result_blocks.push_back(std::move(chunk));
  }

  BlockDecomposition result = decomposition_from_blocks(
      sorted_with_leftovers(std::move(result_blocks), tv, used), horizon);
  if (result.block_size_max > size_bound)
    throw std::logic_error("merge produced a block of size " +
                           std::to_string(result.block_size_max) +
                           " above the bound " + std::to_string(size_bound));
  return result;
}

std::vector<Prefix> split_into_super_thin(const BlockDecomposition& decomposition) {
  if (decomposition.blocks.empty())
    throw DomainError("split: empty decomposition");
  const i64 part_count = decomposition.block_size_max;
  std::vector<Prefix> parts;
  parts.reserve(static_cast<std::size_t>(part_count));
  for (i64 i = 1; i <= part_count; ++i) {
    std::vector<i64> part;
    for (const auto& block : decomposition.blocks) {
      // Padding repeats the block maximum; the repeated value already lives
      // in an earlier part, so only blocks with a fresh i-th element
      // contribute.
      if (static_cast<i64>(block.size()) >= i)
        part.push_back(block[static_cast<std::size_t>(i - 1)]);
    }
    parts.emplace_back(decomposition.horizon, std::move(part),
                       "split part " + std::to_string(i));
  }
  return parts;
}

CoverResult thin_intersection_cover(const Prefix& s, i64 horizon) {
  require_horizon(s.horizon(), horizon, "S");
  const std::vector<i64>& t = s.elements();
  const i64 len = static_cast<i64>(t.size());

  std::vector<CoverStage> stages;
  i64 prev_index = 0;   // 1-based index of the previous stage's anchor
  i64 prev_anchor = 0;  // its value
  for (i64 k = 1;; ++k) {
    std::optional<i64> found;
    for (i64 n = prev_index + 1; n + 1 <= len; ++n) {
      const i64 anchor = t[static_cast<std::size_t>(n - 1)];
      const i64 next = t[static_cast<std::size_t>(n)];
      if (k > 1 && anchor <= 2 * prev_anchor) continue;
      if (next - anchor > 2 * k) {
        found = n;
        break;
      }
    }
    if (!found) break;
    const i64 n = *found;
    const i64 anchor = t[static_cast<std::size_t>(n - 1)];
    const i64 next = t[static_cast<std::size_t>(n)];
    if (anchor + k > horizon) break;  // the run no longer fits

    CoverStage stage;
    stage.k = k;
    stage.index = n;
    stage.anchor = anchor;
    stage.next = next;
    for (i64 v = anchor; v <= anchor + k; ++v) stage.a_block.push_back(v);
    for (i64 v = next - k; v <= next; ++v) stage.b_block.push_back(v);
    stages.push_back(std::move(stage));
    prev_index = n;
    prev_anchor = anchor;
  }

  if (stages.size() < 3)
    throw DomainError("horizon too small: found " +
                      std::to_string(stages.size()) +
                      " cover stages, need at least 3");

  std::vector<i64> a_extra, b_extra;
  for (const CoverStage& stage : stages) {
    a_extra.insert(a_extra.end(), stage.a_block.begin(), stage.a_block.end());
    b_extra.insert(b_extra.end(), stage.b_block.begin(), stage.b_block.end());
  }
  CoverResult result;
  result.a_prime =
      Prefix::merged(s, Prefix(horizon, std::move(a_extra), "cover runs A"));
  result.b_prime =
      Prefix::merged(s, Prefix(horizon, std::move(b_extra), "cover runs B"));
  result.stages = std::move(stages);
  return result;
}

namespace {

SetExpr build_a_frak() {
  SetExpr expr = SetExpr::union_of(
      {SetExpr::catalog("pow", {2}), SetExpr::catalog("pow2plus1")});
  Certificate cert;
  cert.density = Rational(0);
  cert.gap_at_most_infinitely_often = 1;
  cert.reciprocal_gap_sum_converges = false;
  Certificate::BlockWitness witness;
  witness.block = [](i64 k) {
    const i64 p = i64{1} << std::min<i64>(k, 62);
    return std::vector<i64>{p, p + 1};
  };
  witness.size_bound = 2;
  witness.inter_gap_lower_bound = [](i64 k) { return int_pow(Int(2), k) - 1; };
  witness.inter_gap_tends_to_infinity = true;
  witness.inter_gap_reciprocal_sum_converges = true;
  cert.block_witness = std::move(witness);
  return expr.with_certificate(std::move(cert));
}

struct GalleryEntry {
  std::string name;
  std::string description;
  SetExpr (*build)();
};

const std::vector<GalleryEntry>& gallery_registry() {
  static const std::vector<GalleryEntry>* entries = [] {
    auto* v = new std::vector<GalleryEntry>{
        {"A_frak", "{2^k} with {2^k + 1}: adjacent pairs drifting apart",
         [] { return build_a_frak(); }},
        {"pow2", "powers of two", [] { return SetExpr::catalog("pow", {2}); }},
        {"pow2plus1", "powers of two shifted by one",
         [] { return SetExpr::catalog("pow2plus1"); }},
        {"pow2run", "runs {2^k, ..., 2^k + k} of unbounded length",
         [] { return SetExpr::catalog("pow2run"); }},
        {"pow2pair", "pairs {2^k, 2^k + k} with slowly widening partners",
         [] { return SetExpr::catalog("pow2pair"); }},
        {"tri", "triangular numbers",
         [] { return SetExpr::catalog("tri"); }},
        {"triY", "triangular numbers with odd-indexed companions",
         [] { return SetExpr::catalog("triY"); }},
        {"cubicgap", "blocks with cubic internal gaps and matching jumps",
         [] { return SetExpr::catalog("cubicgap"); }},
        {"primes", "prime numbers (no certificate, diagnostics only)",
         [] { return SetExpr::catalog("primes"); }},
    };
    return v;
  }();
  return *entries;
}

}  // namespace

SetExpr gallery(const std::string& name) {
  for (const auto& entry : gallery_registry())
    if (entry.name == name) return entry.build();
  throw DomainError("unknown gallery name: " + name);
}

std::vector<std::pair<std::string, std::string>> gallery_entries() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : gallery_registry())
    out.emplace_back(entry.name, entry.description);
  return out;
}

}  // namespace thinset
