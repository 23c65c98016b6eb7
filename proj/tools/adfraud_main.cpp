// SPDX-License-Identifier: Apache-2.0
/*
Copyright (C) 2026 The adfraud Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// adfraud command line: detect, explore, bench generate, bench run.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "adfraud/corpus.hpp"
#include "adfraud/fraud.hpp"
#include "adfraud/generator.hpp"
#include "adfraud/json_error.hpp"
#include "adfraud/model_json.hpp"
#include "adfraud/utg_json.hpp"
#include "json.hpp"

namespace {

using namespace adfraud;

constexpr int kNoFraud = 0;
constexpr int kFraud = 1;
constexpr int kUsage = 2;
constexpr int kCorpusFailures = 3;

struct Configs {
  std::string ad_config;
  std::string rule_config;

  AdFeatureConfig ad() const {
    return ad_config.empty() ? AdFeatureConfig::defaults() : parse_ad_config(read_file(ad_config));
  }
  RuleConfig rules() const {
    return rule_config.empty() ? RuleConfig{} : parse_rule_config(read_file(rule_config));
  }
};

// "0.05,0.05" or a JSON file with the FaultConfig fields.
FaultConfig parse_faults(const std::string& spec, std::uint64_t seed) {
  FaultConfig f;
  f.seed = seed;
  const auto comma = spec.find(',');
  if (comma != std::string::npos) {
    f.ad_load_failure_rate = std::stod(spec.substr(0, comma));
    f.inherited_ad_rate = std::stod(spec.substr(comma + 1));
  } else {
    const auto j = nlohmann::json::parse(read_file(spec));
    f.ad_load_failure_rate = j.value("ad_load_failure_rate", 0.0);
    f.inherited_ad_rate = j.value("inherited_ad_rate", 0.0);
    f.seed = j.value("seed", seed);
  }
  f.validate();
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobile ad fraud detection over UI transition graphs"};
  app.require_subcommand(1);

  Configs detect_cfg;
  std::string utg_path;
  std::string format = "json";
  bool infer_kinds = false;
  auto* detect = app.add_subcommand("detect", "Check a UI transition graph for ad fraud");
  detect->add_option("utg", utg_path, "UTG JSON file")->required();
  detect->add_option("--ad-config", detect_cfg.ad_config, "Ad view detection config");
  detect->add_option("--rule-config", detect_cfg.rule_config, "Fraud rule config");
  detect->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  detect->add_flag("--infer-kinds", infer_kinds, "Tag state kinds from activity names");

  std::string model_path;
  std::string strategy = "ad_first";
  ExplorationConfig ecfg;
  auto* exp = app.add_subcommand("explore", "Explore an app model and print its UTG");
  exp->add_option("model", model_path, "App model JSON file")->required();
  exp->add_option("--strategy", strategy, "ad_first or random")
      ->check(CLI::IsMember({"ad_first", "random"}));
  exp->add_option("--budget", ecfg.event_budget, "Event budget")->check(CLI::PositiveNumber);
  exp->add_option("--seed", ecfg.seed, "Random strategy seed");
  exp->add_option("--wait", ecfg.transition_wait, "Virtual seconds per event")
      ->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "Benchmark corpus");
  bench->require_subcommand(1);
  BenchmarkSpec spec;
  std::string out_dir = "bench";
  auto* gen = bench->add_subcommand("generate", "Write a labeled benchmark of app models");
  gen->add_option("--fraud", spec.fraud, "Fraudulent apps")->check(CLI::NonNegativeNumber);
  gen->add_option("--clean", spec.clean, "Compliant apps")->check(CLI::NonNegativeNumber);
  gen->add_option("--dual", spec.dual, "Fraud apps with a secondary drive-by");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_option("--out", out_dir, "Output directory");

  std::string run_dir;
  std::string faults;
  std::uint64_t fault_seed = 1;
  std::string run_format = "text";
  Configs run_cfg;
  CorpusOptions copts;
  auto* run = bench->add_subcommand("run", "Run detection over a benchmark directory");
  run->add_option("dir", run_dir, "Benchmark directory")->required();
  run->add_option("--faults", faults, "Fault rates 'load,inherited' or a JSON file");
  run->add_option("--fault-seed", fault_seed, "Fault injection seed");
  run->add_option("--workers", copts.workers, "Parallel workers")->check(CLI::PositiveNumber);
  run->add_option("--budget", copts.exploration.event_budget, "Event budget per app")
      ->check(CLI::PositiveNumber);
  run->add_option("--format", run_format, "Output format")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--ad-config", run_cfg.ad_config, "Ad view detection config");
  run->add_option("--rule-config", run_cfg.rule_config, "Fraud rule config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*detect) {
      const auto ad_cfg = detect_cfg.ad();
      const auto rules = detect_cfg.rules();
      auto graph = deserialize(read_file(utg_path));
      if (infer_kinds) graph = with_inferred_kinds(std::move(graph));
      const auto report = check_all(graph, ad_cfg, rules);
      std::cout << (format == "json" ? report_to_json(report) : render_text(report));
      return report.fraudulent ? kFraud : kNoFraud;
    }
    if (*exp) {
      ecfg.strategy = *parse_strategy(strategy);
      const auto result = explore(deserialize_model(read_file(model_path)), ecfg);
      std::cout << serialize(result.graph);
      std::cerr << result.events << " events, " << result.graph.states.size() << " states, "
                << result.elapsed_seconds << " virtual seconds\n";
      return kNoFraud;
    }
    if (*gen) {
      const auto apps = generate_benchmark(spec);
      const auto manifest = write_benchmark(out_dir, apps, spec.seed);
      std::cerr << "wrote " << manifest.apps.size() << " models to " << out_dir << "\n";
      return kNoFraud;
    }
    if (*run) {
      copts.ad_cfg = run_cfg.ad();
      copts.rule_cfg = run_cfg.rules();
      if (!faults.empty()) copts.faults = parse_faults(faults, fault_seed);
      const auto result = run_corpus(run_dir, copts);
      std::cout << emit_report(result, run_format == "json" ? ReportFormat::json : ReportFormat::text);
      if (result.metrics.skipped > 0) return kCorpusFailures;
      return result.metrics.tp + result.metrics.fp > 0 ? kFraud : kNoFraud;
    }
  } catch (const InvalidGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
