#include "thinset/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "thinset/errors.hpp"
#include "thinset/version.hpp"

namespace thinset {

using Json = nlohmann::ordered_json;

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw DomainError("unknown format: " + name + " (expected json|csv|text)");
}

namespace {

Json to_json(const Evidence& evidence) {
  Json scalars = Json::object();
  for (const auto& [key, value] : evidence.scalars) scalars[key] = to_pq(value);
  Json series = Json::object();
  for (const auto& [key, values] : evidence.series) {
    Json list = Json::array();
    for (const Rational& value : values) list.push_back(to_pq(value));
    series[key] = std::move(list);
  }
  return Json{{"summary", evidence.summary},
              {"scalars", std::move(scalars)},
              {"series", std::move(series)}};
}

Json to_json(const Verdict& verdict) {
  return Json{{"class", to_string(verdict.cls)},
              {"status", to_string(verdict.status)},
              {"horizon", verdict.horizon},
              {"evidence", to_json(verdict.evidence)}};
}

Json elements_json(const std::vector<i64>& elements) {
  Json list = Json::array();
  for (i64 e : elements) list.push_back(e);
  return list;
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

struct ReportBuilder::Impl {
  std::string command;
  std::vector<std::string> argv;
  Json items = Json::array();

  void push(Json item) { items.push_back(std::move(item)); }
};

ReportBuilder::ReportBuilder(std::string command, std::vector<std::string> argv)
    : impl_(std::make_unique<Impl>()) {
  impl_->command = std::move(command);
  impl_->argv = std::move(argv);
}

ReportBuilder::~ReportBuilder() = default;
ReportBuilder::ReportBuilder(ReportBuilder&&) noexcept = default;
ReportBuilder& ReportBuilder::operator=(ReportBuilder&&) noexcept = default;

void ReportBuilder::add_verdict(const std::string& set, const Verdict& verdict) {
  Json item = to_json(verdict);
  item["type"] = "verdict";
  item["set"] = set;
  impl_->push(std::move(item));
}

void ReportBuilder::add_density_profile(const std::string& set,
                                        const DensityProfile& profile) {
  Json points = Json::array();
  for (std::size_t i = 0; i < profile.checkpoints.size(); ++i)
    points.push_back(Json{{"n", profile.checkpoints[i]},
                          {"ratio", to_pq(profile.ratios[i])}});
  impl_->push(Json{{"type", "density-profile"},
                   {"set", set},
                   {"points", std::move(points)},
                   {"tail_start", profile.tail_start},
                   {"liminf_estimate", to_pq(profile.running_liminf_estimate)},
                   {"limsup_estimate", to_pq(profile.running_limsup_estimate)}});
}

void ReportBuilder::add_exact_density(const std::string& set,
                                      const std::optional<Rational>& density) {
  impl_->push(Json{{"type", "exact-density"},
                   {"set", set},
                   {"density", density ? Json(to_pq(*density)) : Json("unavailable")}});
}

void ReportBuilder::add_uniform_profile(const std::string& set,
                                        const UniformDensityProfile& profile) {
  Json points = Json::array();
  for (std::size_t i = 0; i < profile.k_values.size(); ++i)
    points.push_back(Json{{"k", profile.k_values[i]},
                          {"sup_window_avg", to_pq(profile.sup_window_avg[i])},
                          {"inf_window_avg", to_pq(profile.inf_window_avg[i])}});
  impl_->push(Json{{"type", "uniform-density-profile"},
                   {"set", set},
                   {"burn_in", profile.burn_in},
                   {"points", std::move(points)},
                   {"sup_nonincreasing", profile.sup_nonincreasing}});
}

void ReportBuilder::add_decomposition(const std::string& label,
                                      const BlockDecomposition& decomposition) {
  Json blocks = Json::array();
  for (const auto& block : decomposition.blocks)
    blocks.push_back(elements_json(block));
  Json item{{"type", "block-decomposition"},
            {"label", label},
            {"horizon", decomposition.horizon},
            {"block_size_max", decomposition.block_size_max},
            {"blocks", std::move(blocks)},
            {"inter_block_gaps", elements_json(decomposition.inter_block_gaps)}};
  if (decomposition.gap_threshold)
    item["gap_threshold"] = *decomposition.gap_threshold;
  impl_->push(std::move(item));
}

void ReportBuilder::add_prefix(const std::string& label, const Prefix& prefix) {
  impl_->push(Json{{"type", "prefix"},
                   {"label", label},
                   {"source", prefix.source()},
                   {"horizon", prefix.horizon()},
                   {"count", prefix.size()},
                   {"elements", elements_json(prefix.elements())}});
}

void ReportBuilder::add_parts(const std::string& label,
                              const std::vector<Prefix>& parts) {
  Json list = Json::array();
  for (const Prefix& part : parts) list.push_back(elements_json(part.elements()));
  impl_->push(Json{{"type", "parts"},
                   {"label", label},
                   {"count", parts.size()},
                   {"parts", std::move(list)}});
}

void ReportBuilder::add_cover(const CoverResult& cover) {
  Json stages = Json::array();
  for (const CoverStage& stage : cover.stages)
    stages.push_back(Json{{"k", stage.k},
                          {"index", stage.index},
                          {"anchor", stage.anchor},
                          {"next", stage.next},
                          {"a_block", elements_json(stage.a_block)},
                          {"b_block", elements_json(stage.b_block)}});
  impl_->push(Json{{"type", "cover"},
                   {"stages", std::move(stages)},
                   {"a_prime_count", cover.a_prime.size()},
                   {"b_prime_count", cover.b_prime.size()},
                   {"a_prime", elements_json(cover.a_prime.elements())},
                   {"b_prime", elements_json(cover.b_prime.elements())}});
}

void ReportBuilder::add_exceedance_report(const std::string& sequence,
                                          const ExceedanceReport& report) {
  Json verdicts = Json::array();
  for (const auto& [cls, verdict] : report.verdicts)
    verdicts.push_back(to_json(verdict));
  Json modes = Json::array();
  for (const auto& [mode, status] : report.modes)
    modes.push_back(Json{{"mode", to_string(mode)},
                         {"status", to_string(status)}});
  impl_->push(Json{{"type", "exceedance-report"},
                   {"sequence", sequence},
                   {"limit", to_pq(report.limit)},
                   {"epsilon", to_pq(report.epsilon)},
                   {"horizon", report.horizon},
                   {"exceedance_count", report.exceedance.size()},
                   {"exceedance_head",
                    elements_json(std::vector<i64>(
                        report.exceedance.elements().begin(),
                        report.exceedance.elements().begin() +
                            std::min<std::size_t>(
                                report.exceedance.elements().size(), 64)))},
                   {"modes", std::move(modes)},
                   {"verdicts", std::move(verdicts)}});
}

void ReportBuilder::add_tree_report(const TreeConditionReport& report) {
  Json violations = Json::array();
  for (const TreeViolation& violation : report.violations)
    violations.push_back(Json{{"condition", violation.condition},
                              {"node", violation.node},
                              {"witness", violation.witness}});
  impl_->push(Json{{"type", "tree-report"},
                   {"depth", report.depth},
                   {"horizon", report.horizon},
                   {"nodes_checked", report.nodes_checked},
                   {"all_pass", report.all_pass},
                   {"violations", std::move(violations)}});
}

void ReportBuilder::add_branch_chain(const std::vector<BranchStep>& chain) {
  Json steps = Json::array();
  for (const BranchStep& step : chain)
    steps.push_back(Json{{"node", step.node.to_string()},
                         {"difference", step.difference.to_string()}});
  impl_->push(Json{{"type", "branch-chain"}, {"steps", std::move(steps)}});
}

void ReportBuilder::add_gallery_listing(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  Json list = Json::array();
  for (const auto& [name, description] : entries)
    list.push_back(Json{{"name", name}, {"description", description}});
  impl_->push(Json{{"type", "gallery"}, {"entries", std::move(list)}});
}

void ReportBuilder::add_note(const std::string& key, const std::string& value) {
  impl_->push(Json{{"type", "note"}, {"key", key}, {"value", value}});
}

namespace {

void write_csv_value(std::ostream& out, const Json& value) {
  if (value.is_string())
    out << csv_quote(value.get<std::string>());
  else
    out << csv_quote(value.dump());
}

void write_csv(std::ostream& out, const Json& document) {
  // Plot-style items expand into one row per point; everything else becomes
  // a flat item row.
  out << "type,key,value\n";
  for (const Json& item : document["items"]) {
    const std::string type = item["type"].get<std::string>();
    if (type == "density-profile") {
      out << "density-profile,set,";
      write_csv_value(out, item["set"]);
      out << "\n";
      for (const Json& point : item["points"]) {
        out << "density-point," << point["n"] << ",";
        write_csv_value(out, point["ratio"]);
        out << "\n";
      }
      continue;
    }
    if (type == "uniform-density-profile") {
      for (const Json& point : item["points"]) {
        out << "uniform-density-point," << point["k"] << ",";
        write_csv_value(out, point["sup_window_avg"]);
        out << "\n";
      }
      continue;
    }
    if (type == "verdict") {
      out << "verdict,";
      write_csv_value(out, item["class"]);
      out << ",";
      write_csv_value(out, item["status"]);
      out << "\n";
      continue;
    }
    for (const auto& [key, value] : item.items()) {
      if (key == "type") continue;
      out << type << "," << csv_quote(key) << ",";
      write_csv_value(out, value);
      out << "\n";
    }
  }
}

void write_text(std::ostream& out, const Json& document) {
  out << "thinset " << document["version"].get<std::string>() << " -- "
      << document["command"].get<std::string>() << "\n";
  for (const Json& item : document["items"]) {
    const std::string type = item["type"].get<std::string>();
    out << "[" << type << "]";
    for (const auto& [key, value] : item.items()) {
      if (key == "type") continue;
      out << " " << key << "=";
      if (value.is_string())
        out << value.get<std::string>();
      else
        out << value.dump();
    }
    out << "\n";
  }
}

}  // namespace

void ReportBuilder::write(std::ostream& out, ReportFormat format) const {
  Json document{{"tool", "thinset"},
                {"version", kVersion},
                {"command", impl_->command},
                {"argv", impl_->argv},
                {"items", impl_->items}};
  switch (format) {
    case ReportFormat::Json:
      out << document.dump(2) << "\n";
      return;
    case ReportFormat::Csv:
      write_csv(out, document);
      return;
    case ReportFormat::Text:
      write_text(out, document);
      return;
  }
  throw DomainError("unknown report format");
}

}  // namespace thinset
