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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/taxonomy.hpp"
#include "adfraud/utg.hpp"

namespace adfraud {

/// Network response emitted by a handler.
struct TrafficTemplate {
  HttpMethod method = HttpMethod::GET;
  std::string url;
  std::string response_content_type;
  std::int64_t response_length = 0;
  std::string body_magic;
  bool user_initiated = false;

  bool operator==(const TrafficTemplate&) const = default;
};

enum class EffectKind { navigate, show_ad, exit };

std::string_view to_string(EffectKind k);
std::optional<EffectKind> parse_effect_kind(std::string_view s);

/// What firing a handler does. Every kind names the screen shown afterwards;
/// for `exit` that is the screen the device falls back to.
struct Effect {
  EffectKind kind = EffectKind::navigate;
  std::string target;
  std::optional<TrafficTemplate> traffic;

  bool operator==(const Effect&) const = default;
};

/// `view_id` is empty for back.
struct Handler {
  std::string screen;
  std::string view_id;
  EventType event = EventType::click;
  Effect effect;

  bool operator==(const Handler&) const = default;
};

/// One distinct rendered screen. Several screens may share an activity
/// (a list and its scrolled variant, a dialog over its host).
struct ScreenTemplate {
  std::string id;
  std::string activity;
  StateKind kind = StateKind::content;
  ViewTree view_tree;
  std::vector<std::string> ad_load_traces;
  /// Views rendered by an ad library. Ground truth, never read by detection.
  std::vector<std::string> ad_view_ids;

  bool operator==(const ScreenTemplate&) const = default;
};

/// A scripted fraud insertion and the screens it touches.
struct AdBehavior {
  FraudType type = FraudType::hidden;
  std::string variant;
  std::vector<std::string> screens;

  bool operator==(const AdBehavior&) const = default;
};

enum class FaultKind { ad_load_failure, inherited_ad };

std::string_view to_string(FaultKind k);
std::optional<FaultKind> parse_fault_kind(std::string_view s);

/// A fault applied by inject_faults; kept for error attribution.
struct ModelFault {
  FaultKind kind = FaultKind::ad_load_failure;
  std::string screen;
  std::string view_id;

  bool operator==(const ModelFault&) const = default;
};

struct AppModel {
  AppMeta meta;
  Screen screen;
  std::string launch_screen;
  std::vector<ScreenTemplate> screens;
  std::vector<Handler> handlers;
  std::vector<AdBehavior> ad_behaviors;
  std::vector<ModelFault> faults;
  std::uint64_t seed = 0;

  const ScreenTemplate* find_screen(std::string_view id) const;
  const Handler* find_handler(std::string_view screen, std::string_view view_id,
                              EventType event) const;

  bool operator==(const AppModel&) const = default;
};

/// One message per broken invariant; empty when the model is well-formed.
std::vector<std::string> validate_model(const AppModel& model);

enum class Strategy { ad_first, random };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

struct ExplorationConfig {
  Strategy strategy = Strategy::ad_first;
  /// Events including the initial launch.
  int event_budget = 150;
  /// Virtual seconds charged per event.
  double transition_wait = 5.0;
  std::uint64_t seed = 0;
};

struct ExplorationResult {
  UTGraph graph;
  int events = 0;
  double elapsed_seconds = 0.0;
};

/// Drives the model like an automation tool would. Throws std::invalid_argument
/// when the model or config is invalid.
ExplorationResult explore(const AppModel& model, const ExplorationConfig& cfg);

/// Fraction of the model's reachable ad screens present in the graph; 1 when
/// the model has none.
double ad_state_coverage(const AppModel& model, const UTGraph& graph);

/// Screens reachable from the launch screen through handlers.
std::vector<std::string> reachable_screens(const AppModel& model);

/// Fewest events (launch included) needed to first show `screen`, or nullopt.
std::optional<int> shortest_event_path(const AppModel& model, std::string_view screen);

struct FaultConfig {
  double ad_load_failure_rate = 0.0;
  double inherited_ad_rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Perturbs observations, never labels. Ad-load failure keeps the trace but
/// collapses the ad view to an empty placeholder slot. Inherited ads drop the
/// load trace of a scroll/drag target that still shows its source's ad.
AppModel inject_faults(const AppModel& model, const FaultConfig& cfg);

}  // namespace adfraud
