#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinset/numeric.hpp"
#include "thinset/prefix.hpp"
#include "thinset/set_expr.hpp"
#include "thinset/thinness.hpp"

namespace thinset {

// A real sequence given exactly: a two-valued indicator over an exception
// set, one of the two named catalog sequences, or an explicit finite table.
class SequenceDef {
public:
  enum class Kind { IndicatorTwoValue, Catalog, Table };

  // x_n = value_on when n lies in the exception set, value_off otherwise.
  static SequenceDef indicator(SetExpr exceptions, Rational value_on,
                               Rational value_off);
  // "paper_x": -1 on the runs {2^k, ..., 2^k + k - 1}, 1 otherwise.
  // "paper_y": -1 exactly at the powers of two, 1 otherwise.
  static SequenceDef catalog(const std::string& name);
  static SequenceDef table(std::vector<Rational> values);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  const SetExpr& exceptions() const;
  const Rational& value_on() const { return value_on_; }
  const Rational& value_off() const { return value_off_; }
  const std::vector<Rational>& values() const { return values_; }

private:
  SequenceDef() = default;
  Kind kind_ = Kind::Table;
  std::string name_;
  std::optional<SetExpr> exceptions_;
  Rational value_on_;
  Rational value_off_;
  std::vector<Rational> values_;
};

// Values x_1..x_n.
std::vector<Rational> eval_sequence(const SequenceDef& seq, i64 n);

// The exceedance set {n : |x_n - limit| >= eps} as an expression, when the
// sequence shape makes it exact (always, except that tables yield explicit
// sets of their finite length).
std::optional<SetExpr> symbolic_exceedance(const SequenceDef& seq,
                                           const Rational& limit,
                                           const Rational& eps, i64 horizon);

Prefix exceedance_set(const SequenceDef& seq, const Rational& limit,
                      const Rational& eps, i64 horizon);

enum class ConvergenceMode {
  Statistical,
  SuperThinIdeal,
  VeryThinIdeal,
  VeryVeryThinIdeal,
};

std::string to_string(ConvergenceMode mode);
ConvergenceMode convergence_mode_from_string(const std::string& name);
ThinnessClass mode_class(ConvergenceMode mode);

enum class ModeStatus {
  Convergent,        // exceedance membership proved for every tested eps
  NotConvergent,     // refuted for some eps
  ConsistentUpTo,    // no counter-evidence up to the horizon
  InconsistentUpTo,  // diagnostics contradict membership
};

std::string to_string(ModeStatus status);

struct ExceedanceReport {
  Rational limit;
  Rational epsilon;
  i64 horizon = 0;
  Prefix exceedance;
  std::map<ThinnessClass, Verdict> verdicts;
  std::vector<std::pair<ConvergenceMode, ModeStatus>> modes;
};

// One report per epsilon; each mode's status is the thinness verdict of the
// exceedance set for the mode's class.
std::vector<ExceedanceReport> convergence_report(
    const SequenceDef& seq, const Rational& limit,
    const std::vector<Rational>& eps_list, i64 horizon,
    const std::vector<ConvergenceMode>& modes,
    const ClassifyConfig& config = {});

}  // namespace thinset
