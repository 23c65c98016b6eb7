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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adfraud/adview.hpp"
#include "adfraud/fraud.hpp"
#include "adfraud/simulator.hpp"

namespace adfraud {

/// True when the app holds both network permissions and bundles a known ad
/// library, i.e. when it is worth analyzing at all.
bool prefilter(const AppMeta& meta);

/// Exact fraction; `den` may be zero for an undefined ratio.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 0;

  bool defined() const { return den != 0; }
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }
  bool operator==(const Rational&) const = default;
};

/// Two decimals, rounded half up: 46/49 -> "93.88%". "n/a" when undefined.
std::string format_percent(const Rational& r);

struct TypeCounts {
  int tp = 0;
  int fn = 0;

  bool operator==(const TypeCounts&) const = default;
};

struct CorpusMetrics {
  int tp = 0;
  int fp = 0;
  int tn = 0;
  int fn = 0;
  /// Apps that produced a classification (prefiltered ones included).
  int analyzed = 0;
  /// Apps that failed to load or analyze.
  int skipped = 0;
  int prefiltered = 0;
  std::map<FraudType, TypeCounts> per_type;

  Rational precision() const { return {tp, tp + fp}; }
  Rational recall() const { return {tp, tp + fn}; }
  bool operator==(const CorpusMetrics&) const = default;
};

CorpusMetrics metrics_from_counts(int tp, int fp, int tn, int fn);

enum class Outcome { tp, fp, tn, fn };
std::string_view to_string(Outcome o);

struct AppOutcome {
  std::string file;
  std::string package;
  std::vector<FraudType> labels;
  bool prefiltered = false;
  std::optional<FraudReport> report;
  std::optional<std::string> error;
  std::optional<Outcome> outcome;
  /// Why a misclassified app went wrong: "trace_without_ad", "inherited_ad",
  /// "ad_load_failure" or "unexplained".
  std::vector<std::string> mechanisms;
};

struct CorpusOptions {
  ExplorationConfig exploration;
  std::optional<FaultConfig> faults;
  AdFeatureConfig ad_cfg = AdFeatureConfig::defaults();
  RuleConfig rule_cfg;
  int workers = 1;
};

struct CorpusResult {
  std::vector<AppOutcome> apps;
  CorpusMetrics metrics;
};

/// Analyzes one model: faults, exploration, detection.
AppOutcome analyze_model(const AppModel& model, const std::vector<FraudType>& labels,
                         const CorpusOptions& opts);

/// In-memory corpus; labels come from each model's meta.
CorpusResult run_models(const std::vector<AppModel>& models, const CorpusOptions& opts);

/// Directory of app models or UTGs. Uses manifest.json for file order and
/// labels when present, otherwise every *.json file in name order.
CorpusResult run_corpus(const std::filesystem::path& dir, const CorpusOptions& opts);

CorpusMetrics compute_metrics(const std::vector<AppOutcome>& apps);

enum class ReportFormat { json, text };

std::string emit_report(const CorpusResult& result, ReportFormat format);

}  // namespace adfraud
