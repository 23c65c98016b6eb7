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

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/adview.hpp"
#include "adfraud/errors.hpp"
#include "adfraud/taxonomy.hpp"
#include "adfraud/utg.hpp"

namespace adfraud {

/// Human-readable explanation plus the numbers it was derived from. Every
/// number can be recomputed from the serialized graph.
struct Evidence {
  std::string text;
  std::map<std::string, double> numbers;

  bool operator==(const Evidence&) const = default;
};

struct FraudFinding {
  FraudType type = FraudType::hidden;
  std::vector<std::string> state_ids;
  std::vector<std::string> view_ids;
  Evidence evidence;
  std::string rule_config_hash;

  bool operator==(const FraudFinding&) const = default;
};

struct RuleConfig {
  // Compliance intervals of the size rule, per ad kind.
  RatioInterval size_banner{0.004, 0.09};
  RatioInterval size_interstitial{0.2, 0.8};
  RatioInterval size_full{0.9, 1.0};
  /// Max union area of all ads in a state with app content, as a screen fraction.
  double number_area_cap = 0.5;
  /// A display count strictly above this is frequent.
  int frequent_threshold = 3;
  /// Response content types that count as a download besides ZIP payloads.
  std::vector<std::string> download_content_types = {
      "application/vnd.android.package-archive",
      "application/octet-stream",
      "application/zip",
  };
  std::set<FraudType> disabled;

  bool enabled(FraudType t) const { return !disabled.count(t); }
  const RatioInterval& size_interval(AdKind k) const;

  /// Throws std::invalid_argument listing every broken invariant.
  void validate() const;

  bool operator==(const RuleConfig&) const = default;
};

RuleConfig parse_rule_config(std::string_view json_text);
std::string rule_config_to_json(const RuleConfig& cfg);

/// Stable 64-bit FNV-1a digest (16 hex chars) of both canonical configs.
std::string config_hash(const AdFeatureConfig& ad_cfg, const RuleConfig& rule_cfg);

// Single-state rules. `ads` is the detector output for `state`.

/// Ad views partly or fully covered by a non-ad leaf drawn above them.
std::vector<FraudFinding> check_hidden(const UIState& state, std::span<const DetectedAd> ads);

/// Ad views whose area ratio is outside the compliance interval of their kind.
std::vector<FraudFinding> check_size(const UIState& state, std::span<const DetectedAd> ads,
                                     const Screen& screen, const RuleConfig& cfg);

/// Union ad area above the cap in a state that also shows app content.
std::vector<FraudFinding> check_number(const UIState& state, std::span<const DetectedAd> ads,
                                       const Screen& screen, const RuleConfig& cfg);

/// Ad views drawn at or above clickable non-ad leaves they intersect.
std::vector<FraudFinding> check_overlap(const UIState& state, std::span<const DetectedAd> ads);

// Graph rules. `ads` is parallel to graph.states.

/// Interstitial or full-screen ad in the next state over an interactive view
/// (button or dialog element) of the previous state.
std::vector<FraudFinding> check_interaction(const UTGraph& graph, std::span<const StateAds> ads);

/// Ad state, unconfirmed download, same activity afterwards, touch event.
std::vector<FraudFinding> check_drive_by(const UTGraph& graph, std::span<const StateAds> ads,
                                         const RuleConfig& cfg);

/// Ads shown in states outside the app's declared activities.
std::vector<FraudFinding> check_outside(const UTGraph& graph, std::span<const StateAds> ads);

/// Interstitial or full-screen ad states displayed over more distinct incoming
/// edges than the threshold.
std::vector<FraudFinding> check_frequent(const UTGraph& graph, std::span<const StateAds> ads,
                                         const RuleConfig& cfg);

/// Interstitial or full-screen ads on, or next to, launch/login/exit/error/
/// thank-you states.
std::vector<FraudFinding> check_non_content(const UTGraph& graph, std::span<const StateAds> ads);

/// True for the element types the interaction rule treats as click targets.
bool is_interactive_view(const ViewTree& tree, const ViewNode& view);

/// Keyword tagger for ingested graphs: splash -> launch, login/signin ->
/// login, exit/finish/quit -> exit.
std::optional<StateKind> kind_from_activity_name(std::string_view activity);

/// Re-tags content states whose activity name matches a keyword.
UTGraph with_inferred_kinds(UTGraph graph);

struct FraudReport {
  std::string package;
  bool fraudulent = false;
  std::vector<FraudFinding> findings;
  std::string config_hash;

  bool operator==(const FraudReport&) const = default;
};

/// Orders by type, then state ids, then view ids.
void sort_findings(std::vector<FraudFinding>& findings);

/// Runs every enabled rule. Throws InvalidGraph when validate() fails.
FraudReport check_all(const UTGraph& graph, const AdFeatureConfig& ad_cfg,
                      const RuleConfig& rule_cfg);

std::string report_to_json(const FraudReport& report);
FraudReport report_from_json(std::string_view text);
std::string render_text(const FraudReport& report);

}  // namespace adfraud
