#include "thinset/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "thinset/constructions.hpp"
#include "thinset/errors.hpp"
#include "thinset/parser.hpp"
#include "thinset/report.hpp"
#include "thinset/version.hpp"

namespace thinset {

namespace {

std::vector<i64> parse_int_csv(const std::string& text) {
  std::vector<i64> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) values.push_back(std::stoll(item));
  if (values.empty()) throw DomainError("empty integer list: \"" + text + "\"");
  return values;
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) values.push_back(parse_rational(item));
  if (values.empty()) throw DomainError("empty rational list: \"" + text + "\"");
  return values;
}

SetExpr resolve_set(const std::string& set_text,
                    const std::string& gallery_name) {
  if (!set_text.empty() && !gallery_name.empty())
    throw DomainError("give either --set or --gallery, not both");
  if (!set_text.empty()) return parse_set_expr(set_text);
  if (!gallery_name.empty()) return gallery(gallery_name);
  throw DomainError("one of --set or --gallery is required");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"thin integer sets: exact densities, block decompositions, "
               "thinness classification, convergence reports"};
  app.name("thinset");
  app.set_version_flag("--version", std::string("thinset ") + kVersion);
  app.require_subcommand(1);

  std::string set_text, gallery_name, format = "json";
  i64 horizon = 0;
  std::string class_name;
  bool all_classes = false;
  std::string mgrid_text = "1,2,3,4,5,6,7,8";
  std::string checkpoints_text, k_values_text;
  i64 burn_in = -1;
  i64 gap_threshold = 1;
  std::string rule = "lemma-1";
  std::string s_text, t_text;
  std::string seq_name, exceptions_text;
  std::string on_text = "-1", off_text = "1";
  std::string limit_text = "0", eps_text = "1/2";
  std::string modes_text = "statistical,very-thin";
  i64 depth = 8;
  std::string bits_text, indices_text;
  std::string family_name = "dyadic";

  const auto add_common = [&](CLI::App* sub, i64 default_horizon) {
    horizon = default_horizon;
    sub->add_option("--format", format, "output format: json|csv|text")
        ->capture_default_str();
    sub->add_option("--horizon", horizon, "materialization horizon")
        ->capture_default_str();
  };
  const std::string gallery_help = [] {
    std::string help = "named gallery set:";
    for (const auto& [name, description] : gallery_entries()) {
      (void)description;
      help += " " + name;
    }
    return help;
  }();
  const auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", set_text, "set expression (see grammar in help)");
    sub->add_option("--gallery", gallery_name, gallery_help);
  };
  const auto emit = [&](const ReportBuilder& report) {
    report.write(out, report_format_from_string(format));
  };
  const auto make_report = [&](const CLI::App* sub) {
    std::vector<std::string> argv;
    for (const std::string& a : args) argv.push_back(a);
    return ReportBuilder(sub->get_name(), std::move(argv));
  };

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "thinness verdicts for a set expression");
  add_set(classify_cmd);
  add_common(classify_cmd, i64{1} << 20);
  classify_cmd->add_option("--class", class_name,
                           "one class (Thin, SuperThin, VeryThin, "
                           "SuperSuperThin, VeryVeryThin, UniformlyThin)");
  classify_cmd->add_flag("--all", all_classes, "all six classes");
  classify_cmd->add_option("--mgrid", mgrid_text,
                           "comma-separated run-gap thresholds")
      ->capture_default_str();
  classify_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    ClassifyConfig config;
    config.m_grid = parse_int_csv(mgrid_text);
    ReportBuilder report = make_report(classify_cmd);
    if (all_classes || class_name.empty()) {
      for (const auto& [cls, verdict] : classify_all(expr, horizon, config))
        report.add_verdict(expr.to_string(), verdict);
    } else {
      report.add_verdict(expr.to_string(),
                         classify(expr, thinness_class_from_string(class_name),
                                  horizon, config));
    }
    emit(report);
  });

  CLI::App* density_cmd = app.add_subcommand(
      "density", "exact density (when decidable) and a ratio profile");
  add_set(density_cmd);
  add_common(density_cmd, i64{1} << 20);
  density_cmd->add_option("--checkpoints", checkpoints_text,
                          "comma-separated checkpoint positions");
  density_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    const Prefix prefix = enumerate_upto(expr, horizon);
    const std::vector<i64> checkpoints =
        checkpoints_text.empty() ? doubling_checkpoints(horizon)
                                 : parse_int_csv(checkpoints_text);
    ReportBuilder report = make_report(density_cmd);
    report.add_exact_density(expr.to_string(), exact_density(expr));
    report.add_density_profile(expr.to_string(),
                               density_profile(prefix, checkpoints));
    emit(report);
  });

  CLI::App* udensity_cmd = app.add_subcommand(
      "udensity", "extreme window averages over all offsets");
  add_set(udensity_cmd);
  add_common(udensity_cmd, i64{1} << 16);
  udensity_cmd->add_option("--k", k_values_text,
                           "comma-separated window lengths");
  udensity_cmd->add_option("--burnin", burn_in,
                           "smallest window offset (default: isqrt(horizon))");
  udensity_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    const Prefix prefix = enumerate_upto(expr, horizon);
    std::vector<i64> k_values;
    if (k_values_text.empty()) {
      for (i64 k = 4; k <= horizon / 16; k *= 2) k_values.push_back(k);
      if (k_values.empty()) k_values.push_back(1);
    } else {
      k_values = parse_int_csv(k_values_text);
    }
    const i64 h0 = burn_in >= 0 ? burn_in : isqrt(horizon);
    ReportBuilder report = make_report(udensity_cmd);
    report.add_uniform_profile(expr.to_string(),
                               uniform_density_profile(prefix, k_values, h0));
    emit(report);
  });

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "greedy block decomposition at a gap threshold");
  add_set(decompose_cmd);
  add_common(decompose_cmd, i64{1} << 16);
  decompose_cmd->add_option("--m", gap_threshold, "gap threshold")
      ->capture_default_str();
  decompose_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    const Prefix prefix = enumerate_upto(expr, horizon);
    ReportBuilder report = make_report(decompose_cmd);
    report.add_decomposition(expr.to_string(),
                             greedy_block_decomposition(prefix, gap_threshold));
    emit(report);
  });

  CLI::App* merge_cmd = app.add_subcommand(
      "merge", "merge two sets into a bounded-block decomposition");
  add_common(merge_cmd, 100000);
  merge_cmd->add_option("--rule", rule,
                        "lemma-1 (two gap-divergent sets) or lemma-2 "
                        "(block decomposition + gap-divergent set)")
      ->capture_default_str();
  merge_cmd->add_option("--s", s_text, "first set expression")->required();
  merge_cmd->add_option("--t", t_text, "second set expression")->required();
  merge_cmd->add_option("--m", gap_threshold,
                        "greedy threshold for the first set (lemma-2)")
      ->capture_default_str();
  merge_cmd->callback([&] {
    const Prefix s = enumerate_upto(parse_set_expr(s_text), horizon);
    const Prefix t = enumerate_upto(parse_set_expr(t_text), horizon);
    ReportBuilder report = make_report(merge_cmd);
    if (rule == "lemma-1" || rule == "pair") {
      report.add_decomposition("merge(" + s_text + ", " + t_text + ")",
                               merge_super_thin(s, t, horizon));
    } else if (rule == "lemma-2" || rule == "block") {
      const BlockDecomposition blocks =
          greedy_block_decomposition(s, gap_threshold);
      report.add_decomposition("merge(" + s_text + " @" +
                                   std::to_string(gap_threshold) + ", " +
                                   t_text + ")",
                               merge_very_thin_super_thin(blocks, t, horizon));
    } else {
      throw DomainError("unknown merge rule: " + rule);
    }
    emit(report);
  });

  CLI::App* split_cmd = app.add_subcommand(
      "split", "split a bounded-block decomposition into gap-divergent parts");
  add_set(split_cmd);
  add_common(split_cmd, i64{1} << 16);
  split_cmd->add_option("--m", gap_threshold, "greedy gap threshold")
      ->capture_default_str();
  split_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    const Prefix prefix = enumerate_upto(expr, horizon);
    const BlockDecomposition decomposition =
        greedy_block_decomposition(prefix, gap_threshold);
    ReportBuilder report = make_report(split_cmd);
    report.add_decomposition(expr.to_string(), decomposition);
    report.add_parts(expr.to_string(), split_into_super_thin(decomposition));
    emit(report);
  });

  CLI::App* cover_cmd = app.add_subcommand(
      "cover", "write a set as the intersection of two run-rich supersets");
  add_set(cover_cmd);
  add_common(cover_cmd, i64{1} << 15);
  cover_cmd->callback([&] {
    const SetExpr expr = resolve_set(set_text, gallery_name);
    const Prefix prefix = enumerate_upto(expr, horizon);
    ReportBuilder report = make_report(cover_cmd);
    report.add_cover(thin_intersection_cover(prefix, horizon));
    emit(report);
  });

  CLI::App* converge_cmd = app.add_subcommand(
      "converge", "convergence-mode verdicts via exceedance-set thinness");
  add_common(converge_cmd, i64{1} << 16);
  converge_cmd->add_option("--seq", seq_name, "paper_x or paper_y");
  converge_cmd->add_option("--exceptions", exceptions_text,
                           "exception set for a two-valued sequence");
  converge_cmd->add_option("--on", on_text,
                           "value on the exception set (rational)")
      ->capture_default_str();
  converge_cmd->add_option("--off", off_text, "value elsewhere (rational)")
      ->capture_default_str();
  converge_cmd->add_option("--limit", limit_text, "limit candidate (rational)")
      ->capture_default_str();
  converge_cmd->add_option("--eps", eps_text, "comma-separated epsilons")
      ->capture_default_str();
  converge_cmd->add_option("--modes", modes_text,
                           "comma-separated: statistical,super-thin,"
                           "very-thin,very-very-thin")
      ->capture_default_str();
  converge_cmd->callback([&] {
    SequenceDef seq = [&] {
      if (!seq_name.empty() && !exceptions_text.empty())
        throw DomainError("give either --seq or --exceptions, not both");
      if (!seq_name.empty()) return SequenceDef::catalog(seq_name);
      if (!exceptions_text.empty())
        return SequenceDef::indicator(parse_set_expr(exceptions_text),
                                      parse_rational(on_text),
                                      parse_rational(off_text));
      throw DomainError("one of --seq or --exceptions is required");
    }();
    std::vector<ConvergenceMode> modes;
    std::stringstream stream(modes_text);
    std::string item;
    while (std::getline(stream, item, ','))
      if (!item.empty()) modes.push_back(convergence_mode_from_string(item));
    ReportBuilder report = make_report(converge_cmd);
    for (const ExceedanceReport& er :
         convergence_report(seq, parse_rational(limit_text),
                            parse_rational_csv(eps_text), horizon, modes))
      report.add_exceedance_report(seq.name(), er);
    emit(report);
  });

  CLI::App* gallery_cmd =
      app.add_subcommand("gallery", "named example sets");
  CLI::App* gallery_list = gallery_cmd->add_subcommand("list", "list entries");
  gallery_cmd->require_subcommand(1);
  gallery_list->add_option("--format", format, "output format")
      ->capture_default_str();
  gallery_list->callback([&] {
    ReportBuilder report = make_report(gallery_list);
    report.add_gallery_listing(gallery_entries());
    emit(report);
  });

  CLI::App* bw_cmd = app.add_subcommand(
      "bw", "binary splitting tree family and witness constructions");
  bw_cmd->require_subcommand(1);

  CLI::App* bw_verify = bw_cmd->add_subcommand(
      "verify", "check the splitting-family conditions on prefixes");
  add_common(bw_verify, 100000);
  bw_verify->add_option("--depth", depth, "tree depth")->capture_default_str();
  bw_verify->callback([&] {
    ReportBuilder report = make_report(bw_verify);
    report.add_tree_report(verify_tree_conditions(dyadic_family(), depth, horizon));
    emit(report);
  });

  CLI::App* bw_branch = bw_cmd->add_subcommand(
      "branch", "chain of nodes and removed classes along a branch");
  add_common(bw_branch, i64{1} << 12);
  bw_branch->add_option("--x", bits_text, "branch bits, e.g. 010")->required();
  bw_branch->callback([&] {
    ReportBuilder report = make_report(bw_branch);
    report.add_branch_chain(branch_chain(BitString::parse(bits_text)));
    emit(report);
  });

  CLI::App* bw_ar = bw_cmd->add_subcommand(
      "ar", "union of initial segments of the branch differences");
  add_common(bw_ar, 1024);
  bw_ar->add_option("--x", bits_text, "branch bits")->required();
  bw_ar->add_option("--indices", indices_text,
                    "comma-separated strictly increasing segment lengths")
      ->required();
  bw_ar->callback([&] {
    ReportBuilder report = make_report(bw_ar);
    report.add_prefix("ar-set",
                      build_ar_set(BitString::parse(bits_text),
                                   parse_int_csv(indices_text), horizon));
    emit(report);
  });

  CLI::App* bw_case1 = bw_cmd->add_subcommand(
      "case1", "witness with growing runs along a branch");
  add_common(bw_case1, 4096);
  bw_case1->add_option("--x", bits_text, "branch bits")->required();
  bw_case1->add_option("--m", gap_threshold, "gap bound for runs")
      ->capture_default_str();
  bw_case1->add_option("--family", family_name, "dyadic or omega")
      ->capture_default_str();
  bw_case1->callback([&] {
    TreeFamily family = family_name == "omega"
                            ? TreeFamily{[](const BitString&) {
                                return SetExpr::residue_class(1, 1);
                              }}
                            : dyadic_family();
    const Case1Result result = case1_witness(family, BitString::parse(bits_text),
                                             gap_threshold, horizon);
    ReportBuilder report = make_report(bw_case1);
    report.add_prefix("case1-witness", result.witness);
    report.add_decomposition(
        "case1-runs", decomposition_from_blocks(result.runs, horizon));
    emit(report);
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("thinset");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace thinset
