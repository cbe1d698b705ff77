// Copyright 2026 The shadows Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Campaigns are described by a single JSON config
// (or a built-in preset); flags override config fields. Identical config +
// seed produce byte-identical outputs regardless of --workers.
//
// Exit codes: 0 success, 2 config error, 3 runtime guard, 4 validation
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadows/campaign.hpp"
#include "shadows/validate.hpp"

namespace {

using namespace shadows;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;
constexpr int kExitValidation = 4;

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::uint64_t seed = 0;
  std::size_t shots = 0;
  std::size_t workers = 1;
  std::string out;
  std::string format = "csv";

  bool seed_given = false;
  bool shots_given = false;
};

void add_common(CLI::App* sub, CommonOpts& o, bool wants_campaign) {
  if (wants_campaign) {
    sub->add_option("--config", o.config_path,
                    "campaign config (JSON file)")
        ->check(CLI::ExistingFile);
    sub->add_option("--preset", o.preset,
                    "built-in campaign preset (see `preset list`)");
    sub->add_option("--seed", o.seed, "override the campaign master seed");
    sub->add_option("--shots", o.shots, "override the shot count");
  }
  sub->add_option("--workers", o.workers,
                  "worker threads (default $SHADOWS_WORKERS or 1)")
      ->envname("SHADOWS_WORKERS")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  sub->add_option("--out", o.out, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

// Loads the campaign from --preset or --config; flags override fields. A
// config file may also carry "out" and "format" keys, which the flags
// override in turn.
CampaignConfig load_campaign(CLI::App* sub, CommonOpts& o) {
  o.seed_given = sub->count("--seed") > 0;
  o.shots_given = sub->count("--shots") > 0;
  const bool has_config = !o.config_path.empty();
  const bool has_preset = !o.preset.empty();
  if (has_config == has_preset)
    throw std::invalid_argument(
        "exactly one of --config and --preset is required");

  CampaignConfig cfg;
  if (has_preset) {
    cfg = campaign_preset(o.preset);
  } else {
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot open " + o.config_path);
    nlohmann::json doc = nlohmann::json::parse(in);
    cfg = CampaignConfig::from_json(doc);
    if (sub->count("--out") == 0 && doc.contains("out"))
      o.out = doc.at("out").get<std::string>();
    if (sub->count("--format") == 0 && doc.contains("format"))
      o.format = doc.at("format").get<std::string>();
  }
  if (o.seed_given) cfg.seed = o.seed;
  if (o.shots_given) cfg.shots = o.shots;
  return cfg;
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty())
    std::cout << payload;
  else
    write_text_file(o.out, payload);
}

int cmd_norm(CLI::App* sub, CommonOpts& o) {
  CampaignConfig cfg = load_campaign(sub, o);
  NormReport rep = run_norm(cfg);
  std::ostringstream os;
  if (o.format == "csv") {
    write_norms_csv(os, rep.rows);
  } else {
    nlohmann::json doc{{"command", "norm"},
                       {"config", cfg.to_json()},
                       {"summary", rep.summary}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows) doc["rows"].push_back(norm_row_to_json(r));
    os << doc.dump(2) << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_sweep(CLI::App* sub, CommonOpts& o, const std::string& axis) {
  CampaignConfig cfg = load_campaign(sub, o);
  if (!axis.empty()) cfg.sweep.axis = axis;
  // on this subcommand --shots means the empirical shots per sweep point
  if (o.shots_given) {
    cfg.shots = 10000;  // restore; the override applies to the sweep
    cfg.sweep.shots = o.shots;
  }
  std::vector<SweepRow> rows = run_sweep(cfg, o.workers);
  std::ostringstream os;
  if (o.format == "csv") {
    write_sweep_csv(os, rows);
  } else {
    nlohmann::json doc{{"command", "sweep"}, {"config", cfg.to_json()}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rows) doc["rows"].push_back(sweep_row_to_json(r));
    os << doc.dump(2) << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_estimate(CLI::App* sub, CommonOpts& o, const std::string& dataset_out,
                 const std::vector<std::string>& dataset_in) {
  CampaignConfig cfg = load_campaign(sub, o);
  std::vector<Estimate> rows;
  nlohmann::json summary;
  if (!dataset_in.empty()) {
    // re-estimate from stored snapshot files instead of sampling
    std::vector<SnapshotDataset> datasets;
    for (const auto& path : dataset_in)
      datasets.push_back(read_snapshots_file(path));
    cfg.validate(false, true);
    rows = estimate_set(cfg.operators, datasets, cfg.groups, cfg.route,
                        o.workers);
    nlohmann::json ds_info = nlohmann::json::array();
    for (const auto& ds : datasets)
      ds_info.push_back({{"fingerprint", protocol_fingerprint(ds.protocol)},
                         {"protocol", ds.protocol.label()},
                         {"seed", ds.seed},
                         {"shots", ds.snapshots.size()},
                         {"state", ds.state_label}});
    summary = nlohmann::json{{"datasets", std::move(ds_info)}};
  } else {
    EstimateReport rep = run_estimate(cfg, o.workers);
    rows = std::move(rep.rows);
    summary = std::move(rep.summary);
    if (!dataset_out.empty())
      for (std::size_t i = 0; i < rep.datasets.size(); ++i)
        write_snapshots_file(
            dataset_out + "-" + std::to_string(i) + ".jsonl",
            rep.datasets[i]);
  }

  std::ostringstream os;
  if (o.format == "csv") {
    write_estimates_csv(os, rows);
  } else {
    nlohmann::json doc{{"command", "estimate"},
                       {"config", cfg.to_json()},
                       {"summary", summary}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& e : rows) doc["rows"].push_back(estimate_to_json(e));
    os << doc.dump(2) << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_validate(CommonOpts& o, const std::string& level, bool tamper) {
  ValidationContext ctx;
  ctx.workers = o.workers;
  if (tamper)
    // negative control: corrupt every analytic table and expect failures
    ctx.eigenvalues = [](const ProtocolSpec& spec) {
      ChannelEigenvalues eigs = protocol_eigenvalues(spec);
      for (auto& block : eigs.blocks)
        for (auto& lam : block.lambda) lam *= 1.02;
      return eigs;
    };

  std::vector<ValidationCheck> checks = run_validation(
      level == "full", ctx, [](const ValidationCheck& c) {
        std::cerr << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name << '\n';
      });

  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed;
  std::ostringstream os;
  if (o.format == "csv") {
    os << "name,result,detail\n";
    for (const auto& c : checks)
      os << c.name << ',' << (c.passed ? "PASS" : "FAIL") << ','
         << shadows::detail::csv_field(c.detail) << '\n';
  } else {
    nlohmann::json doc{{"command", "validate"}, {"level", level},
                       {"passed", passed}, {"total", checks.size()}};
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      doc["checks"].push_back(
          {{"detail", c.detail}, {"name", c.name}, {"passed", c.passed}});
    os << doc.dump(2) << '\n';
  }
  emit(o, os.str());
  std::cerr << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitValidation;
}

int cmd_preset_list() {
  for (const auto& name : campaign_preset_names()) {
    CampaignConfig cfg = campaign_preset(name);
    std::cout << name << "  (" << cfg.num_qubits << " qubits, "
              << cfg.protocols.size() << " protocols, "
              << cfg.operators.size() << " operators)\n";
  }
  return kExitOk;
}

int cmd_preset_show(CommonOpts& o, const std::string& name) {
  CampaignConfig cfg = campaign_preset(name);
  emit(o, cfg.to_json().dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shadows: simulate and analyze randomized-measurement shadow "
      "estimation with locally entangled bases"};
  app.require_subcommand(1);

  CommonOpts norm_o, sweep_o, est_o, val_o, show_o;
  std::string axis, level = "fast", show_name, dataset_out;
  std::vector<std::string> dataset_in;
  bool tamper = false;

  CLI::App* norm = app.add_subcommand(
      "norm", "analytic shadow norms and sample budgets (no simulation)");
  add_common(norm, norm_o, true);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "scaling curves over k, delta or n (analytic + optional "
               "empirical columns)");
  add_common(sweep, sweep_o, true);
  sweep->add_option("--axis", axis, "sweep axis (overrides config)")
      ->check(CLI::IsMember({"k", "delta", "n"}));

  CLI::App* est = app.add_subcommand(
      "estimate", "sample snapshots and estimate the operator set");
  add_common(est, est_o, true);
  est->add_option("--dataset-out", dataset_out,
                  "also write each sampled dataset to PREFIX-<i>.jsonl");
  est->add_option("--dataset-in", dataset_in,
                  "estimate from stored snapshot files instead of sampling");

  CLI::App* val = app.add_subcommand("validate", "run the self-check suite");
  add_common(val, val_o, false);
  val->add_option("level", level, "fast (analytic, seconds) or full "
                                  "(adds Monte Carlo laws, minutes)")
      ->check(CLI::IsMember({"fast", "full"}));
  val->add_flag("--tamper", tamper,
                "corrupt the eigenvalue tables first (negative control; "
                "the suite must fail)");

  CLI::App* preset = app.add_subcommand("preset", "built-in campaigns");
  preset->require_subcommand(1);
  CLI::App* plist = preset->add_subcommand("list", "list campaign presets");
  CLI::App* pshow =
      preset->add_subcommand("show", "print a preset as a JSON config");
  pshow->add_option("name", show_name, "preset name")->required();
  pshow->add_option("--out", show_o.out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (norm->parsed()) return cmd_norm(norm, norm_o);
    if (sweep->parsed()) return cmd_sweep(sweep, sweep_o, axis);
    if (est->parsed()) return cmd_estimate(est, est_o, dataset_out, dataset_in);
    if (val->parsed()) return cmd_validate(val_o, level, tamper);
    if (plist->parsed()) return cmd_preset_list();
    if (pshow->parsed()) return cmd_preset_show(show_o, show_name);
  } catch (const guard_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  }
  return kExitConfig;
}
