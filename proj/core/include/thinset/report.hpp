#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "thinset/bw.hpp"
#include "thinset/constructions.hpp"
#include "thinset/convergence.hpp"
#include "thinset/density.hpp"
#include "thinset/thinness.hpp"

namespace thinset {

enum class ReportFormat { Json, Csv, Text };

ReportFormat report_format_from_string(const std::string& name);

// Accumulates typed result items and renders one deterministic document per
// invocation: command echo, version, then items in insertion order.
class ReportBuilder {
public:
  ReportBuilder(std::string command, std::vector<std::string> argv);
  ~ReportBuilder();
  ReportBuilder(ReportBuilder&&) noexcept;
  ReportBuilder& operator=(ReportBuilder&&) noexcept;

  void add_verdict(const std::string& set, const Verdict& verdict);
  void add_density_profile(const std::string& set, const DensityProfile& profile);
  void add_exact_density(const std::string& set,
                         const std::optional<Rational>& density);
  void add_uniform_profile(const std::string& set,
                           const UniformDensityProfile& profile);
  void add_decomposition(const std::string& label,
                         const BlockDecomposition& decomposition);
  void add_prefix(const std::string& label, const Prefix& prefix);
  void add_parts(const std::string& label, const std::vector<Prefix>& parts);
  void add_cover(const CoverResult& cover);
  void add_exceedance_report(const std::string& sequence,
                             const ExceedanceReport& report);
  void add_tree_report(const TreeConditionReport& report);
  void add_branch_chain(const std::vector<BranchStep>& chain);
  void add_gallery_listing(
      const std::vector<std::pair<std::string, std::string>>& entries);
  void add_note(const std::string& key, const std::string& value);

  void write(std::ostream& out, ReportFormat format) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace thinset
