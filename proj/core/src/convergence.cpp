#include "thinset/convergence.hpp"

#include <algorithm>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

SetExpr paper_x_exceptions() {
  Certificate cert;
  cert.density = Rational(0);
  cert.gap_at_most_infinitely_often = 1;
  cert.reciprocal_gap_sum_converges = false;
  auto blocks = [](i64 k) {
    std::vector<i64> block;
    const i64 start = i64{1} << std::min<i64>(k, 62);
    for (i64 j = 0; j < k; ++j) block.push_back(start + j);
    return block;
  };
  return make_block_family("paper_x.exceptions", blocks, std::move(cert));
}

SetExpr whole_line() { return SetExpr::residue_class(1, 1); }

}  // namespace

SequenceDef SequenceDef::indicator(SetExpr exceptions, Rational value_on,
                                   Rational value_off) {
  SequenceDef seq;
  seq.kind_ = Kind::IndicatorTwoValue;
  seq.name_ = "indicator(" + exceptions.to_string() + ")";
  seq.exceptions_ = std::move(exceptions);
  seq.value_on_ = std::move(value_on);
  seq.value_off_ = std::move(value_off);
  return seq;
}

SequenceDef SequenceDef::catalog(const std::string& name) {
  if (name == "paper_x") {
    SequenceDef seq = indicator(paper_x_exceptions(), Rational(-1), Rational(1));
    seq.kind_ = Kind::Catalog;
    seq.name_ = "paper_x";
    return seq;
  }
  if (name == "paper_y") {
    SequenceDef seq =
        indicator(SetExpr::catalog("pow", {2}), Rational(-1), Rational(1));
    seq.kind_ = Kind::Catalog;
    seq.name_ = "paper_y";
    return seq;
  }
  throw DomainError("unknown sequence name: " + name +
                    " (expected paper_x or paper_y)");
}

SequenceDef SequenceDef::table(std::vector<Rational> values) {
  SequenceDef seq;
  seq.kind_ = Kind::Table;
  seq.name_ = "table[" + std::to_string(values.size()) + "]";
  seq.values_ = std::move(values);
  return seq;
}

const SetExpr& SequenceDef::exceptions() const {
  if (!exceptions_) throw DomainError("sequence has no exception set");
  return *exceptions_;
}

std::vector<Rational> eval_sequence(const SequenceDef& seq, i64 n) {
  if (n < 1) throw DomainError("eval_sequence: need n >= 1");
  switch (seq.kind()) {
    case SequenceDef::Kind::Table: {
      if (n > static_cast<i64>(seq.values().size()))
        throw DomainError("table sequence has only " +
                          std::to_string(seq.values().size()) + " values");
      return std::vector<Rational>(seq.values().begin(),
                                   seq.values().begin() + n);
    }
    case SequenceDef::Kind::IndicatorTwoValue:
    case SequenceDef::Kind::Catalog: {
      std::vector<Rational> values(static_cast<std::size_t>(n),
                                   seq.value_off());
      const Prefix exceptions = enumerate_upto(seq.exceptions(), n);
      for (i64 e : exceptions.elements())
        values[static_cast<std::size_t>(e - 1)] = seq.value_on();
      return values;
    }
  }
  throw DomainError("corrupt sequence definition");
}

std::optional<SetExpr> symbolic_exceedance(const SequenceDef& seq,
                                           const Rational& limit,
                                           const Rational& eps, i64 horizon) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  switch (seq.kind()) {
    case SequenceDef::Kind::Table: {
      const std::vector<Rational> values = eval_sequence(seq, horizon);
      std::vector<i64> indices;
      for (i64 i = 1; i <= horizon; ++i)
        if (abs(values[static_cast<std::size_t>(i - 1)] - limit) >= eps)
          indices.push_back(i);
      return SetExpr::explicit_set(std::move(indices));
    }
    case SequenceDef::Kind::IndicatorTwoValue:
    case SequenceDef::Kind::Catalog: {
      const bool on_exceeds = abs(seq.value_on() - limit) >= eps;
      const bool off_exceeds = abs(seq.value_off() - limit) >= eps;
      if (on_exceeds && off_exceeds) return whole_line();
      if (on_exceeds) return seq.exceptions();
      if (off_exceeds)
        return SetExpr::difference(whole_line(), seq.exceptions());
      return SetExpr::explicit_set({});
    }
  }
  return std::nullopt;
}

Prefix exceedance_set(const SequenceDef& seq, const Rational& limit,
                      const Rational& eps, i64 horizon) {
  const auto expr = symbolic_exceedance(seq, limit, eps, horizon);
  if (!expr) throw DomainError("exceedance set unavailable");
  return enumerate_upto(*expr, horizon);
}

std::string to_string(ConvergenceMode mode) {
  switch (mode) {
    case ConvergenceMode::Statistical: return "statistical";
    case ConvergenceMode::SuperThinIdeal: return "super-thin";
    case ConvergenceMode::VeryThinIdeal: return "very-thin";
    case ConvergenceMode::VeryVeryThinIdeal: return "very-very-thin";
  }
  throw DomainError("unknown convergence mode");
}

ConvergenceMode convergence_mode_from_string(const std::string& name) {
  if (name == "statistical") return ConvergenceMode::Statistical;
  if (name == "super-thin") return ConvergenceMode::SuperThinIdeal;
  if (name == "very-thin") return ConvergenceMode::VeryThinIdeal;
  if (name == "very-very-thin") return ConvergenceMode::VeryVeryThinIdeal;
  throw DomainError("unknown convergence mode: " + name);
}

ThinnessClass mode_class(ConvergenceMode mode) {
  switch (mode) {
    case ConvergenceMode::Statistical: return ThinnessClass::Thin;
    case ConvergenceMode::SuperThinIdeal: return ThinnessClass::SuperThin;
    case ConvergenceMode::VeryThinIdeal: return ThinnessClass::VeryThin;
    case ConvergenceMode::VeryVeryThinIdeal: return ThinnessClass::VeryVeryThin;
  }
  throw DomainError("unknown convergence mode");
}

std::string to_string(ModeStatus status) {
  switch (status) {
    case ModeStatus::Convergent: return "Convergent";
    case ModeStatus::NotConvergent: return "NotConvergent";
    case ModeStatus::ConsistentUpTo: return "ConsistentUpTo";
    case ModeStatus::InconsistentUpTo: return "InconsistentUpTo";
  }
  throw DomainError("unknown mode status");
}

namespace {

ModeStatus status_from_verdict(const Verdict& verdict) {
  switch (verdict.status) {
    case VerdictStatus::ProvedSymbolic: return ModeStatus::Convergent;
    case VerdictStatus::RefutedSymbolic: return ModeStatus::NotConvergent;
    case VerdictStatus::ConsistentUpTo: return ModeStatus::ConsistentUpTo;
    case VerdictStatus::InconsistentUpTo: return ModeStatus::InconsistentUpTo;
  }
  throw DomainError("unknown verdict status");
}

}  // namespace

std::vector<ExceedanceReport> convergence_report(
    const SequenceDef& seq, const Rational& limit,
    const std::vector<Rational>& eps_list, i64 horizon,
    const std::vector<ConvergenceMode>& modes, const ClassifyConfig& config) {
  if (eps_list.empty()) throw DomainError("need at least one epsilon");
  if (modes.empty()) throw DomainError("need at least one convergence mode");

  std::vector<ExceedanceReport> reports;
  reports.reserve(eps_list.size());
  for (const Rational& eps : eps_list) {
    const auto expr = symbolic_exceedance(seq, limit, eps, horizon);
    if (!expr) throw DomainError("exceedance set unavailable");

    ExceedanceReport report;
    report.limit = limit;
    report.epsilon = eps;
    report.horizon = horizon;
    report.exceedance = enumerate_upto(*expr, horizon);
    report.verdicts = classify_all(*expr, horizon, config);
    for (ConvergenceMode mode : modes)
      report.modes.emplace_back(
          mode, status_from_verdict(report.verdicts.at(mode_class(mode))));
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace thinset
