#pragma once

#include <optional>
#include <vector>

#include "thinset/numeric.hpp"
#include "thinset/prefix.hpp"
#include "thinset/set_expr.hpp"

namespace thinset {

// Exact ratios A(n)/n at increasing checkpoints, with min/max taken over the
// tail of the checkpoint list as finite-horizon liminf/limsup estimates.
struct DensityProfile {
  std::vector<i64> checkpoints;
  std::vector<Rational> ratios;
  std::size_t tail_start = 0;
  Rational running_liminf_estimate;
  Rational running_limsup_estimate;
};

DensityProfile density_profile(const Prefix& prefix,
                               std::vector<i64> checkpoints,
                               double tail_fraction = 0.5);

// Doubling checkpoints {first, 2*first, ...} up to the horizon, horizon
// always included.
std::vector<i64> doubling_checkpoints(i64 horizon, i64 first = 16);

// Exact asymptotic density when it is decidable from the expression shape:
// finite sets, residue classes, unions via inclusion-exclusion, generators
// with a declared density. nullopt means "unavailable".
std::optional<Rational> exact_density(const SetExpr& expr);

// Per window length k: extreme window averages over all window offsets
// h in [burn_in, horizon - k].
struct UniformDensityProfile {
  i64 burn_in = 0;
  std::vector<i64> k_values;
  std::vector<Rational> sup_window_avg;
  std::vector<Rational> inf_window_avg;
  bool sup_nonincreasing = true;
};

UniformDensityProfile uniform_density_profile(const Prefix& prefix,
                                              std::vector<i64> k_values,
                                              i64 burn_in);

// Extreme counts over windows [h+1, h+k], h in [burn_in, horizon - k].
i64 max_window_count(const Prefix& prefix, i64 k, i64 burn_in);
i64 min_window_count(const Prefix& prefix, i64 k, i64 burn_in);

}  // namespace thinset
