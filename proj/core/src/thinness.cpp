#include "thinset/thinness.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "thinset/density.hpp"
#include "thinset/errors.hpp"

namespace thinset {

std::string to_string(ThinnessClass cls) {
  switch (cls) {
    case ThinnessClass::Thin: return "Thin";
    case ThinnessClass::SuperThin: return "SuperThin";
    case ThinnessClass::VeryThin: return "VeryThin";
    case ThinnessClass::SuperSuperThin: return "SuperSuperThin";
    case ThinnessClass::VeryVeryThin: return "VeryVeryThin";
    case ThinnessClass::UniformlyThin: return "UniformlyThin";
  }
  throw DomainError("unknown thinness class");
}

ThinnessClass thinness_class_from_string(const std::string& name) {
  for (ThinnessClass cls : kAllClasses)
    if (name == to_string(cls)) return cls;
  if (name == "thin") return ThinnessClass::Thin;
  if (name == "super-thin") return ThinnessClass::SuperThin;
  if (name == "very-thin") return ThinnessClass::VeryThin;
  if (name == "super-super-thin") return ThinnessClass::SuperSuperThin;
  if (name == "very-very-thin") return ThinnessClass::VeryVeryThin;
  if (name == "uniformly-thin") return ThinnessClass::UniformlyThin;
  throw DomainError("unknown class name: " + name);
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::ProvedSymbolic: return "ProvedSymbolic";
    case VerdictStatus::RefutedSymbolic: return "RefutedSymbolic";
    case VerdictStatus::ConsistentUpTo: return "ConsistentUpTo";
    case VerdictStatus::InconsistentUpTo: return "InconsistentUpTo";
  }
  throw DomainError("unknown verdict status");
}

namespace {

i64 longest_run(const std::vector<i64>& elems, std::size_t begin,
                std::size_t end, i64 max_gap) {
  if (begin >= end) return 0;
  i64 best = 1, current = 1;
  for (std::size_t i = begin + 1; i < end; ++i) {
    if (elems[i] - elems[i - 1] <= max_gap)
      ++current;
    else
      current = 1;
    best = std::max(best, current);
  }
  return best;
}

}  // namespace

i64 run_statistic(const Prefix& prefix, i64 max_gap) {
  if (prefix.empty()) throw DomainError("run_statistic: empty prefix");
  if (max_gap < 1) throw DomainError("run_statistic: max gap must be >= 1");
  return longest_run(prefix.elements(), 0, prefix.elements().size(), max_gap);
}

std::vector<i64> BlockDecomposition::flatten() const {
  std::vector<i64> out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  return out;
}

BlockDecomposition greedy_block_decomposition(const Prefix& prefix,
                                              i64 max_gap) {
  if (prefix.empty())
    throw DomainError("greedy_block_decomposition: empty prefix");
  if (max_gap < 1)
    throw DomainError("greedy_block_decomposition: max gap must be >= 1");
  std::vector<std::vector<i64>> blocks;
  const auto& elems = prefix.elements();
  std::vector<i64> current{elems.front()};
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i] - elems[i - 1] <= max_gap) {
      current.push_back(elems[i]);
    } else {
      blocks.push_back(std::move(current));
      current = {elems[i]};
    }
  }
  blocks.push_back(std::move(current));
  return decomposition_from_blocks(std::move(blocks), prefix.horizon(),
                                   max_gap);
}

BlockDecomposition decomposition_from_blocks(
    std::vector<std::vector<i64>> blocks, i64 horizon,
    std::optional<i64> gap_threshold) {
  BlockDecomposition result;
  result.horizon = horizon;
  result.gap_threshold = gap_threshold;
  result.blocks = std::move(blocks);
  i64 prev_max = 0;
  for (std::size_t i = 0; i < result.blocks.size(); ++i) {
    const auto& block = result.blocks[i];
    if (block.empty()) throw DomainError("decomposition has an empty block");
    if (!std::is_sorted(block.begin(), block.end()) ||
        std::adjacent_find(block.begin(), block.end()) != block.end())
      throw DomainError("decomposition block is not strictly increasing");
    if (block.front() < 1 || block.back() > horizon)
      throw DomainError("decomposition block outside [1, horizon]");
    if (i > 0) {
      const i64 gap = block.front() - prev_max;
      if (gap <= 0) throw DomainError("decomposition blocks are not ordered");
      result.inter_block_gaps.push_back(gap);
    }
    result.block_size_max =
        std::max(result.block_size_max, static_cast<i64>(block.size()));
    prev_max = block.back();
  }
  return result;
}

std::vector<Rational> reciprocal_gap_partial_sums(const GapSequence& gaps) {
  if (gaps.gaps.empty())
    throw DomainError("reciprocal_gap_partial_sums: empty gap list");
  std::vector<Rational> sums;
  sums.reserve(gaps.gaps.size());
  Rational acc(0);
  for (i64 gap : gaps.gaps) {
    if (gap < 1) throw DomainError("gaps must be >= 1");
    acc += ratio(1, gap);
    sums.push_back(acc);
  }
  return sums;
}

// ---------------------------------------------------------------------------
// Symbolic fact derivation
// ---------------------------------------------------------------------------

namespace {

constexpr int kClassCount = 6;

int idx(ThinnessClass cls) { return static_cast<int>(cls); }

struct Edge {
  ThinnessClass from;  // membership in `from` implies membership in `to`
  ThinnessClass to;
};

constexpr Edge kEdges[] = {
    {ThinnessClass::SuperSuperThin, ThinnessClass::SuperThin},
    {ThinnessClass::SuperSuperThin, ThinnessClass::VeryVeryThin},
    {ThinnessClass::SuperThin, ThinnessClass::VeryThin},
    {ThinnessClass::VeryVeryThin, ThinnessClass::VeryThin},
    {ThinnessClass::VeryThin, ThinnessClass::UniformlyThin},
    {ThinnessClass::UniformlyThin, ThinnessClass::Thin},
    {ThinnessClass::SuperThin, ThinnessClass::Thin},
    {ThinnessClass::VeryThin, ThinnessClass::Thin},
};

void set_fact(SymbolicFacts& facts, ThinnessClass cls, Fact value,
              const std::string& why) {
  Fact& current = facts.fact[idx(cls)];
  if (current == Fact::Unknown) {
    current = value;
    facts.reason[idx(cls)] = why;
    return;
  }
  if (current != value)
    throw CertificateError("certificate contradiction for " + to_string(cls) +
                           ": \"" + facts.reason[idx(cls)] + "\" vs \"" + why +
                           "\"");
}

void close_facts(SymbolicFacts& facts) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& edge : kEdges) {
      if (facts.of(edge.from) == Fact::Yes && facts.of(edge.to) != Fact::Yes) {
        set_fact(facts, edge.to, Fact::Yes,
                 "implied by " + to_string(edge.from));
        changed = true;
      }
      if (facts.of(edge.to) == Fact::No && facts.of(edge.from) != Fact::No) {
        set_fact(facts, edge.from, Fact::No,
                 "would imply " + to_string(edge.to) + ", which fails");
        changed = true;
      }
    }
  }
}

void apply_certificate_claims(SymbolicFacts& facts, const Certificate& cert) {
  if (cert.gap_lower_bound && cert.gap_lower_tends_to_infinity)
    set_fact(facts, ThinnessClass::SuperThin, Fact::Yes,
             "validated gap lower bound tends to infinity");
  if (cert.gap_at_most_infinitely_often)
    set_fact(facts, ThinnessClass::SuperThin, Fact::No,
             "gaps stay <= " +
                 std::to_string(*cert.gap_at_most_infinitely_often) +
                 " infinitely often");
  if (cert.reciprocal_gap_sum_converges) {
    if (*cert.reciprocal_gap_sum_converges)
      set_fact(facts, ThinnessClass::SuperSuperThin, Fact::Yes,
               "reciprocal gap sum declared convergent");
    else
      set_fact(facts, ThinnessClass::SuperSuperThin, Fact::No,
               "reciprocal gap sum declared divergent");
  }
  if (cert.block_witness) {
    const auto& witness = *cert.block_witness;
    if (witness.inter_gap_tends_to_infinity)
      set_fact(facts, ThinnessClass::VeryThin, Fact::Yes,
               "validated block witness with size bound " +
                   std::to_string(witness.size_bound) +
                   " and inter-block gaps tending to infinity");
    if (witness.inter_gap_reciprocal_sum_converges &&
        *witness.inter_gap_reciprocal_sum_converges)
      set_fact(facts, ThinnessClass::VeryVeryThin, Fact::Yes,
               "validated block witness with convergent inter-block "
               "reciprocal gap sum");
  }
  if (cert.refutes_very_thin)
    set_fact(facts, ThinnessClass::VeryThin, Fact::No, *cert.refutes_very_thin);
  if (cert.refutes_very_very_thin)
    set_fact(facts, ThinnessClass::VeryVeryThin, Fact::No,
             *cert.refutes_very_very_thin);
}

}  // namespace

SymbolicFacts derive_facts(const SetExpr& expr) {
  SymbolicFacts facts;

  if (symbolically_finite(expr)) {
    facts.finite = true;
    facts.density = Rational(0);
    for (ThinnessClass cls : kAllClasses)
      set_fact(facts, cls, Fact::Yes, "finite set");
    return facts;
  }

  using Kind = SetExpr::Kind;
  switch (expr.kind()) {
    case Kind::Union: {
      std::vector<SymbolicFacts> members;
      members.reserve(expr.children().size());
      for (const auto& child : expr.children())
        members.push_back(derive_facts(child));

      // Supersets of a non-member of a class are non-members too (all six
      // classes are closed under subsets).
      for (ThinnessClass cls : kAllClasses)
        for (std::size_t i = 0; i < members.size(); ++i)
          if (members[i].of(cls) == Fact::No) {
            set_fact(facts, cls, Fact::No,
                     "member " + expr.children()[i].to_string() + ": " +
                         members[i].reason_of(cls));
            break;
          }

      const auto all = [&](auto&& pred) {
        return std::all_of(members.begin(), members.end(), pred);
      };
      if (facts.of(ThinnessClass::Thin) == Fact::Unknown &&
          all([](const SymbolicFacts& f) {
            return f.of(ThinnessClass::Thin) == Fact::Yes;
          }))
        set_fact(facts, ThinnessClass::Thin, Fact::Yes,
                 "finite union of density-zero members");
      if (facts.of(ThinnessClass::VeryThin) == Fact::Unknown &&
          all([](const SymbolicFacts& f) {
            return f.of(ThinnessClass::SuperThin) == Fact::Yes ||
                   f.of(ThinnessClass::VeryThin) == Fact::Yes;
          }))
        set_fact(facts, ThinnessClass::VeryThin, Fact::Yes,
                 "finite union of super thin / very thin members");
      if (facts.of(ThinnessClass::VeryVeryThin) == Fact::Unknown &&
          all([](const SymbolicFacts& f) {
            return f.of(ThinnessClass::SuperSuperThin) == Fact::Yes ||
                   f.of(ThinnessClass::VeryVeryThin) == Fact::Yes;
          }))
        set_fact(facts, ThinnessClass::VeryVeryThin, Fact::Yes,
                 "finite union of super super thin / very very thin members");
      if (facts.of(ThinnessClass::UniformlyThin) == Fact::Unknown &&
          all([](const SymbolicFacts& f) {
            return f.of(ThinnessClass::UniformlyThin) == Fact::Yes;
          }))
        set_fact(facts, ThinnessClass::UniformlyThin, Fact::Yes,
                 "window counts are subadditive over a finite union");
      break;
    }
    case Kind::Intersection: {
      const SymbolicFacts left = derive_facts(expr.children()[0]);
      const SymbolicFacts right = derive_facts(expr.children()[1]);
      for (ThinnessClass cls : kAllClasses) {
        if (left.of(cls) == Fact::Yes)
          set_fact(facts, cls, Fact::Yes,
                   "subset of " + expr.children()[0].to_string());
        else if (right.of(cls) == Fact::Yes)
          set_fact(facts, cls, Fact::Yes,
                   "subset of " + expr.children()[1].to_string());
      }
      break;
    }
    case Kind::Difference: {
      const SymbolicFacts left = derive_facts(expr.children()[0]);
      for (ThinnessClass cls : kAllClasses)
        if (left.of(cls) == Fact::Yes)
          set_fact(facts, cls, Fact::Yes,
                   "subset of " + expr.children()[0].to_string());
      break;
    }
    default:
      break;
  }

  if (const Certificate* cert = expr.certificate())
    apply_certificate_claims(facts, *cert);

  if (const auto density = exact_density(expr)) {
    facts.density = density;
    if (*density == 0)
      set_fact(facts, ThinnessClass::Thin, Fact::Yes, "exact density 0/1");
    else
      set_fact(facts, ThinnessClass::Thin, Fact::No,
               "exact density " + to_pq(*density) + " > 0");
  }

  close_facts(facts);
  return facts;
}

// ---------------------------------------------------------------------------
// Empirical diagnostics
// ---------------------------------------------------------------------------

namespace {

Verdict make_verdict(ThinnessClass cls, VerdictStatus status, i64 horizon,
                     Evidence evidence) {
  return Verdict{cls, status, horizon, std::move(evidence)};
}

// Longest run with gaps <= max_gap among elements in (lo, hi].
i64 tail_run_statistic(const std::vector<i64>& elems, i64 lo, i64 hi,
                       i64 max_gap) {
  const auto begin = std::upper_bound(elems.begin(), elems.end(), lo);
  const auto end = std::upper_bound(elems.begin(), elems.end(), hi);
  return longest_run(elems, begin - elems.begin(), end - elems.begin(),
                     max_gap);
}

std::vector<i64> suffix_minima(const std::vector<i64>& values) {
  std::vector<i64> suffix(values.size());
  i64 running = std::numeric_limits<i64>::max();
  for (std::size_t i = values.size(); i-- > 0;) {
    running = std::min(running, values[i]);
    suffix[i] = running;
  }
  return suffix;
}

// Strictly increasing suffix-minimum at the three quartile sample points.
bool gaps_tend_upward(const std::vector<i64>& gaps) {
  const i64 count = static_cast<i64>(gaps.size());
  if (count < 4) return true;
  const std::vector<i64> suffix = suffix_minima(gaps);
  const auto at = [&](i64 numerator) {
    const i64 one_based = (numerator * count + 3) / 4;
    return suffix[static_cast<std::size_t>(one_based - 1)];
  };
  return at(1) < at(2) && at(2) < at(3);
}

struct EmpiricalInputs {
  const Prefix& prefix;
  i64 horizon;
  const ClassifyConfig& config;
};

Verdict raw_thin(const EmpiricalInputs& in) {
  const auto checkpoints = doubling_checkpoints(in.horizon);
  const DensityProfile profile = density_profile(
      in.prefix, checkpoints, in.config.checkpoint_tail_fraction);
  Evidence evidence;
  evidence.series.emplace_back("ratios", profile.ratios);
  evidence.scalars.emplace_back("liminf_estimate",
                                profile.running_liminf_estimate);
  evidence.scalars.emplace_back("limsup_estimate",
                                profile.running_limsup_estimate);
  const std::size_t len = profile.ratios.size();
  bool consistent;
  if (len < 3) {
    consistent = true;
    evidence.summary = "horizon too small for a density trend; no evidence against";
  } else {
    const Rational& r1 = profile.ratios[len - 3];
    const Rational& r2 = profile.ratios[len - 2];
    const Rational& r3 = profile.ratios[len - 1];
    consistent = (r3 == 0) || (r3 <= r2 && r2 <= r1 && r3 < r1);
    evidence.summary =
        consistent ? "density ratios decay across the top doubling checkpoints"
                   : "density ratios do not decay across the top doubling "
                     "checkpoints";
  }
  return make_verdict(ThinnessClass::Thin,
                      consistent ? VerdictStatus::ConsistentUpTo
                                 : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

Verdict raw_super_thin(const EmpiricalInputs& in) {
  Evidence evidence;
  if (in.prefix.size() < 5) {
    evidence.summary = "fewer than five elements; no evidence against";
    return make_verdict(ThinnessClass::SuperThin, VerdictStatus::ConsistentUpTo,
                        in.horizon, std::move(evidence));
  }
  const GapSequence gaps = gap_sequence(in.prefix);
  const std::vector<i64> suffix = suffix_minima(gaps.gaps);
  const i64 count = static_cast<i64>(gaps.gaps.size());
  const i64 tail_index = (3 * count + 3) / 4;  // 1-based ceil(3K/4)
  const i64 tail_min = suffix[static_cast<std::size_t>(tail_index - 1)];
  const i64 threshold_doubled = floor_log2(in.horizon);
  const bool consistent = 2 * tail_min > threshold_doubled;
  evidence.scalars.emplace_back("tail_min_gap", Rational(tail_min));
  evidence.scalars.emplace_back("final_gap", Rational(gaps.gaps.back()));
  evidence.scalars.emplace_back("threshold",
                                ratio(threshold_doubled, 2));
  std::vector<Rational> curve;
  for (i64 q = 1; q <= 4; ++q) {
    const i64 one_based = std::max<i64>(1, (q * count) / 4);
    curve.push_back(Rational(suffix[static_cast<std::size_t>(one_based - 1)]));
  }
  evidence.series.emplace_back("suffix_min_gap_quartiles", std::move(curve));
  evidence.summary = consistent
                         ? "tail minimum gap exceeds log2(horizon)/2"
                         : "small gaps recur into the tail";
  return make_verdict(ThinnessClass::SuperThin,
                      consistent ? VerdictStatus::ConsistentUpTo
                                 : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

struct StabilityProbe {
  bool stable = false;
  std::array<i64, 3> tail_runs{0, 0, 0};
};

// Run lengths measured over the window (H/2, H] for the top three doubling
// horizons; a very thin set eventually stops producing longer runs, so these
// must not grow.
StabilityProbe run_stability(const EmpiricalInputs& in, i64 max_gap) {
  StabilityProbe probe;
  const auto& elems = in.prefix.elements();
  const std::array<i64, 3> horizons{in.horizon / 4, in.horizon / 2,
                                    in.horizon};
  for (std::size_t i = 0; i < horizons.size(); ++i)
    probe.tail_runs[i] =
        tail_run_statistic(elems, horizons[i] / 2, horizons[i], max_gap);
  probe.stable = probe.tail_runs[0] >= probe.tail_runs[1] &&
                 probe.tail_runs[1] >= probe.tail_runs[2];
  return probe;
}

Verdict raw_very_thin(const EmpiricalInputs& in) {
  Evidence evidence;
  if (in.prefix.size() < 2 || in.horizon < 16) {
    evidence.summary = "degenerate prefix; no evidence against";
    return make_verdict(ThinnessClass::VeryThin, VerdictStatus::ConsistentUpTo,
                        in.horizon, std::move(evidence));
  }
  std::optional<i64> witness;
  for (i64 max_gap : in.config.m_grid) {
    const StabilityProbe probe = run_stability(in, max_gap);
    evidence.series.emplace_back(
        "tail_runs_M" + std::to_string(max_gap),
        std::vector<Rational>{Rational(probe.tail_runs[0]),
                              Rational(probe.tail_runs[1]),
                              Rational(probe.tail_runs[2])});
    if (!probe.stable) continue;
    const BlockDecomposition decomposition =
        greedy_block_decomposition(in.prefix, max_gap);
    if (gaps_tend_upward(decomposition.inter_block_gaps)) {
      witness = max_gap;
      break;
    }
  }
  if (witness) {
    evidence.scalars.emplace_back("witness_gap_threshold", Rational(*witness));
    evidence.summary = "runs stay bounded at threshold " +
                       std::to_string(*witness) +
                       " while inter-block gaps grow";
  } else {
    evidence.summary =
        "for every threshold in the grid, runs keep growing or inter-block "
        "gaps stay small";
  }
  return make_verdict(ThinnessClass::VeryThin,
                      witness ? VerdictStatus::ConsistentUpTo
                              : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

// Tail contributions of the reciprocal sums must strictly decay across the
// top two quarters.
bool reciprocal_sums_decay(const std::vector<i64>& gaps) {
  const std::size_t count = gaps.size();
  if (count < 8) return true;
  GapSequence seq{gaps};
  const std::vector<Rational> sums = reciprocal_gap_partial_sums(seq);
  const std::size_t quarter = count / 4, half = count / 2;
  const Rational first = sums[half - 1] - sums[quarter - 1];
  const Rational second = sums[count - 1] - sums[half - 1];
  return second < first;
}

Verdict raw_super_super_thin(const EmpiricalInputs& in) {
  Evidence evidence;
  if (in.prefix.size() < 9) {
    evidence.summary = "fewer than nine elements; no evidence against";
    return make_verdict(ThinnessClass::SuperSuperThin,
                        VerdictStatus::ConsistentUpTo, in.horizon,
                        std::move(evidence));
  }
  const GapSequence gaps = gap_sequence(in.prefix);
  const std::vector<Rational> sums = reciprocal_gap_partial_sums(gaps);
  const std::size_t count = gaps.gaps.size();
  evidence.series.emplace_back(
      "partial_sum_quartiles",
      std::vector<Rational>{sums[count / 4 - 1], sums[count / 2 - 1],
                            sums[3 * count / 4 - 1], sums[count - 1]});
  const bool consistent = reciprocal_sums_decay(gaps.gaps);
  evidence.summary = consistent
                         ? "tail contributions of the reciprocal gap sum decay"
                         : "reciprocal gap sum keeps growing linearly";
  return make_verdict(ThinnessClass::SuperSuperThin,
                      consistent ? VerdictStatus::ConsistentUpTo
                                 : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

Verdict raw_very_very_thin(const EmpiricalInputs& in) {
  Evidence evidence;
  if (in.prefix.size() < 2 || in.horizon < 16) {
    evidence.summary = "degenerate prefix; no evidence against";
    return make_verdict(ThinnessClass::VeryVeryThin,
                        VerdictStatus::ConsistentUpTo, in.horizon,
                        std::move(evidence));
  }
  std::optional<i64> witness;
  for (i64 max_gap : in.config.m_grid) {
    const StabilityProbe probe = run_stability(in, max_gap);
    if (!probe.stable) continue;
    const BlockDecomposition decomposition =
        greedy_block_decomposition(in.prefix, max_gap);
    if (!gaps_tend_upward(decomposition.inter_block_gaps)) continue;
    if (reciprocal_sums_decay(decomposition.inter_block_gaps)) {
      witness = max_gap;
      break;
    }
  }
  if (witness) {
    evidence.scalars.emplace_back("witness_gap_threshold", Rational(*witness));
    evidence.summary = "bounded blocks at threshold " +
                       std::to_string(*witness) +
                       " with decaying inter-block reciprocal gap sums";
  } else {
    evidence.summary =
        "no threshold in the grid yields bounded blocks with decaying "
        "inter-block reciprocal gap sums";
  }
  return make_verdict(ThinnessClass::VeryVeryThin,
                      witness ? VerdictStatus::ConsistentUpTo
                              : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

// Smallest window length whose best tail window (offsets in the top half
// below the horizon) covers at most half its positions. Uniformly thin sets
// keep this scale bounded as the horizon grows; sets with ever-longer dense
// stretches push it upward.
i64 half_coverage_scale(const Prefix& prefix, i64 horizon, i64 cap) {
  const Prefix clipped = prefix.clipped(horizon);
  for (i64 k = 1; k <= cap && horizon / 2 + k <= horizon; ++k)
    if (2 * max_window_count(clipped, k, horizon / 2) <= k) return k;
  return cap + 1;
}

Verdict raw_uniformly_thin(const EmpiricalInputs& in) {
  Evidence evidence;
  if (in.horizon < 64) {
    evidence.summary = "horizon too small for window sweeps; no evidence against";
    return make_verdict(ThinnessClass::UniformlyThin,
                        VerdictStatus::ConsistentUpTo, in.horizon,
                        std::move(evidence));
  }
  const i64 burn_in = in.config.burn_in.value_or(isqrt(in.horizon));
  std::vector<i64> k_values;
  for (i64 k = 4; k <= in.horizon / 16 && burn_in + k <= in.horizon; k *= 2)
    k_values.push_back(k);
  if (k_values.empty()) k_values.push_back(4);
  const UniformDensityProfile profile =
      uniform_density_profile(in.prefix, k_values, burn_in);
  evidence.series.emplace_back("sup_window_avg", profile.sup_window_avg);
  evidence.series.emplace_back("inf_window_avg", profile.inf_window_avg);
  evidence.scalars.emplace_back("burn_in", Rational(burn_in));

  const auto& sups = profile.sup_window_avg;
  bool trend_ok;
  if (sups.size() < 2) {
    trend_ok = true;
  } else {
    const bool halves = sups.back() * 2 <= sups.front();
    bool tail_monotone = true;
    const std::size_t start = sups.size() >= 3 ? sups.size() - 3 : 0;
    for (std::size_t i = start + 1; i < sups.size(); ++i)
      if (sups[i] > sups[i - 1]) tail_monotone = false;
    trend_ok = halves || (tail_monotone && sups.back() < sups.front());
  }

  const i64 cap = 4 * floor_log2(in.horizon) + 8;
  const i64 scale_quarter = half_coverage_scale(in.prefix, in.horizon / 4, cap);
  const i64 scale_half = half_coverage_scale(in.prefix, in.horizon / 2, cap);
  const i64 scale_full = half_coverage_scale(in.prefix, in.horizon, cap);
  const bool scale_stable =
      scale_full <= scale_half && scale_half <= scale_quarter;
  evidence.series.emplace_back(
      "half_coverage_scale",
      std::vector<Rational>{Rational(scale_quarter), Rational(scale_half),
                            Rational(scale_full)});

  const bool consistent = trend_ok && scale_stable;
  evidence.summary =
      consistent
          ? "extreme window averages shrink and the half-coverage scale "
            "stays bounded"
          : (scale_stable ? "extreme window averages do not shrink with "
                            "window length"
                          : "dense stretches keep lengthening: the "
                            "half-coverage scale grows with the horizon");
  return make_verdict(ThinnessClass::UniformlyThin,
                      consistent ? VerdictStatus::ConsistentUpTo
                                 : VerdictStatus::InconsistentUpTo,
                      in.horizon, std::move(evidence));
}

Verdict raw_empirical(ThinnessClass cls, const EmpiricalInputs& in) {
  switch (cls) {
    case ThinnessClass::Thin: return raw_thin(in);
    case ThinnessClass::SuperThin: return raw_super_thin(in);
    case ThinnessClass::VeryThin: return raw_very_thin(in);
    case ThinnessClass::SuperSuperThin: return raw_super_super_thin(in);
    case ThinnessClass::VeryVeryThin: return raw_very_very_thin(in);
    case ThinnessClass::UniformlyThin: return raw_uniformly_thin(in);
  }
  throw DomainError("unknown thinness class");
}

std::map<ThinnessClass, Verdict> classify_impl(const SetExpr& expr,
                                               i64 horizon,
                                               const ClassifyConfig& config) {
  const SymbolicFacts facts = derive_facts(expr);

  std::map<ThinnessClass, Verdict> verdicts;
  std::vector<ThinnessClass> empirical;
  for (ThinnessClass cls : kAllClasses) {
    if (facts.of(cls) == Fact::Yes) {
      Evidence evidence;
      evidence.summary = facts.reason_of(cls);
      verdicts.emplace(cls, make_verdict(cls, VerdictStatus::ProvedSymbolic,
                                         horizon, std::move(evidence)));
    } else if (facts.of(cls) == Fact::No) {
      Evidence evidence;
      evidence.summary = facts.reason_of(cls);
      verdicts.emplace(cls, make_verdict(cls, VerdictStatus::RefutedSymbolic,
                                         horizon, std::move(evidence)));
    } else {
      empirical.push_back(cls);
    }
  }

  if (!empirical.empty()) {
    const Prefix prefix = enumerate_upto(expr, horizon);
    const EmpiricalInputs in{prefix, horizon, config};
    for (ThinnessClass cls : empirical)
      verdicts.emplace(cls, raw_empirical(cls, in));

    // Evidence against an implied class is evidence against the implying
    // class; keep empirical statuses coherent with the implication order.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Edge& edge : kEdges) {
        Verdict& from = verdicts.at(edge.from);
        const Verdict& to = verdicts.at(edge.to);
        if (from.status == VerdictStatus::ConsistentUpTo &&
            to.status == VerdictStatus::InconsistentUpTo) {
          from.status = VerdictStatus::InconsistentUpTo;
          from.evidence.summary = "membership would imply " +
                                  to_string(edge.to) +
                                  ", which the data contradicts; " +
                                  from.evidence.summary;
          changed = true;
        }
      }
    }
  }

  for (const Edge& edge : kEdges) {
    const Verdict& from = verdicts.at(edge.from);
    const Verdict& to = verdicts.at(edge.to);
    if (from.status == VerdictStatus::ProvedSymbolic &&
        (to.status == VerdictStatus::RefutedSymbolic ||
         to.status == VerdictStatus::InconsistentUpTo))
      throw std::logic_error("hierarchy violation: " + to_string(edge.from) +
                             " proved but " + to_string(edge.to) +
                             " contradicted");
  }
  return verdicts;
}

}  // namespace

Verdict classify(const SetExpr& expr, ThinnessClass cls, i64 horizon,
                 const ClassifyConfig& config) {
  return classify_impl(expr, horizon, config).at(cls);
}

std::map<ThinnessClass, Verdict> classify_all(const SetExpr& expr, i64 horizon,
                                              const ClassifyConfig& config) {
  return classify_impl(expr, horizon, config);
}

}  // namespace thinset
