#pragma once

#include <string>
#include <vector>

#include "thinset/numeric.hpp"

namespace thinset {

// Materialized initial segment of a set of positive integers: all members
// up to a horizon, sorted. Immutable after construction.
class Prefix {
public:
  Prefix() = default;
  Prefix(i64 horizon, std::vector<i64> elements, std::string source = {});

  i64 horizon() const { return horizon_; }
  const std::vector<i64>& elements() const { return elements_; }
  const std::string& source() const { return source_; }
  i64 size() const { return static_cast<i64>(elements_.size()); }
  bool empty() const { return elements_.empty(); }

  bool contains(i64 n) const;

  // Same set restricted to a smaller horizon.
  Prefix clipped(i64 new_horizon) const;

  static Prefix merged(const Prefix& a, const Prefix& b);
  static Prefix intersected(const Prefix& a, const Prefix& b);
  static Prefix subtracted(const Prefix& a, const Prefix& b);

private:
  i64 horizon_ = 0;
  std::vector<i64> elements_;
  std::string source_;
};

struct GapSequence {
  std::vector<i64> gaps;  // gaps[k] = n_{k+2} - n_{k+1} in 0-based storage
};

// A(n): number of elements <= n. Requires 1 <= n <= horizon.
i64 count_upto(const Prefix& prefix, i64 n);

// Number of elements in the window [h+1, h+k]. Requires h >= 0, k >= 1,
// h + k <= horizon.
i64 window_count(const Prefix& prefix, i64 h, i64 k);

// Consecutive differences; requires at least two elements.
GapSequence gap_sequence(const Prefix& prefix);

}  // namespace thinset
