#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thinset/numeric.hpp"
#include "thinset/prefix.hpp"
#include "thinset/set_expr.hpp"

namespace thinset {

enum class ThinnessClass {
  Thin,
  SuperThin,
  VeryThin,
  SuperSuperThin,
  VeryVeryThin,
  UniformlyThin,
};

inline constexpr ThinnessClass kAllClasses[] = {
    ThinnessClass::Thin,          ThinnessClass::SuperThin,
    ThinnessClass::VeryThin,      ThinnessClass::SuperSuperThin,
    ThinnessClass::VeryVeryThin,  ThinnessClass::UniformlyThin,
};

std::string to_string(ThinnessClass cls);
// Accepts "VeryThin" as well as "very-thin".
ThinnessClass thinness_class_from_string(const std::string& name);

// Length of the longest run of consecutive elements whose successive
// differences are all <= max_gap; 1 when no run of length >= 2 exists.
i64 run_statistic(const Prefix& prefix, i64 max_gap);

// A set written as ordered finite blocks with recorded inter-block gaps.
struct BlockDecomposition {
  i64 horizon = 0;
  // Set when the blocks are the maximal runs with internal gaps <= threshold.
  std::optional<i64> gap_threshold;
  std::vector<std::vector<i64>> blocks;
  i64 block_size_max = 0;
  std::vector<i64> inter_block_gaps;  // min(block[k+1]) - max(block[k])

  std::vector<i64> flatten() const;
};

BlockDecomposition greedy_block_decomposition(const Prefix& prefix,
                                              i64 max_gap);

// Validates ordering and records sizes/gaps; for construction outputs.
BlockDecomposition decomposition_from_blocks(
    std::vector<std::vector<i64>> blocks, i64 horizon,
    std::optional<i64> gap_threshold = std::nullopt);

// Running sums of 1/gap as exact rationals.
std::vector<Rational> reciprocal_gap_partial_sums(const GapSequence& gaps);

enum class VerdictStatus {
  ProvedSymbolic,
  RefutedSymbolic,
  ConsistentUpTo,
  InconsistentUpTo,
};

std::string to_string(VerdictStatus status);

struct Evidence {
  std::string summary;
  std::vector<std::pair<std::string, Rational>> scalars;
  std::vector<std::pair<std::string, std::vector<Rational>>> series;
};

struct Verdict {
  ThinnessClass cls;
  VerdictStatus status;
  i64 horizon = 0;
  Evidence evidence;

  bool proved() const { return status == VerdictStatus::ProvedSymbolic; }
  bool refuted() const { return status == VerdictStatus::RefutedSymbolic; }
};

// Empirical thresholds. Defaults: burn-in sqrt(N) for window sweeps; tail
// statistics over the last half of the doubling checkpoints; run-statistic
// stability judged over the top three doubling horizons.
struct ClassifyConfig {
  std::vector<i64> m_grid = {1, 2, 3, 4, 5, 6, 7, 8};
  double checkpoint_tail_fraction = 0.5;
  std::optional<i64> burn_in;  // default: isqrt(horizon)
};

enum class Fact { Yes, No, Unknown };

// What the expression's certificates (and the closure of the class
// implications over them) settle symbolically.
struct SymbolicFacts {
  Fact fact[6] = {Fact::Unknown, Fact::Unknown, Fact::Unknown,
                  Fact::Unknown, Fact::Unknown, Fact::Unknown};
  std::string reason[6];
  bool finite = false;
  std::optional<Rational> density;

  Fact of(ThinnessClass cls) const { return fact[static_cast<int>(cls)]; }
  const std::string& reason_of(ThinnessClass cls) const {
    return reason[static_cast<int>(cls)];
  }
};

SymbolicFacts derive_facts(const SetExpr& expr);

Verdict classify(const SetExpr& expr, ThinnessClass cls, i64 horizon,
                 const ClassifyConfig& config = {});

// All six verdicts; throws std::logic_error when a proved class coexists
// with a refuted or empirically contradicted implied class.
std::map<ThinnessClass, Verdict> classify_all(const SetExpr& expr, i64 horizon,
                                              const ClassifyConfig& config = {});

}  // namespace thinset
