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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/geometry.hpp"
#include "adfraud/taxonomy.hpp"

namespace adfraud {

enum class StateKind { launch, login, content, exit, error, thankyou, external };
enum class EventType { click, long_click, scroll, drag, back, app_start, app_exit };
enum class HttpMethod { GET, POST };

std::string_view to_string(StateKind k);
std::string_view to_string(EventType e);
std::string_view to_string(HttpMethod m);
std::optional<StateKind> parse_state_kind(std::string_view s);
std::optional<EventType> parse_event_type(std::string_view s);
std::optional<HttpMethod> parse_http_method(std::string_view s);

/// True for events delivered by touching the screen.
inline bool is_touch(EventType e) {
  return e == EventType::click || e == EventType::long_click;
}

/// One element of a view tree. `z` is a stacking index global to the state
/// (larger is drawn on top), so a pop-up can cover views in other subtrees.
struct ViewNode {
  std::string id;
  std::string class_name;
  std::string resource_id;
  std::string text;
  Bounds bounds;
  int z = 0;
  bool clickable = false;
  std::vector<std::string> children;

  bool is_leaf() const { return children.empty(); }
  bool operator==(const ViewNode&) const = default;
};

struct ViewTree {
  std::string root;
  std::vector<ViewNode> nodes;

  const ViewNode* find(std::string_view id) const;
  /// Parent id of `id`, or nullopt for the root and unknown ids.
  std::optional<std::string> parent_of(std::string_view id) const;

  bool operator==(const ViewTree&) const = default;
};

struct UIState {
  std::string id;
  std::string activity;
  StateKind kind = StateKind::content;
  ViewTree view_tree;
  std::vector<std::string> ad_load_traces;
  std::vector<std::string> traffic_ids;

  bool operator==(const UIState&) const = default;
};

struct Event {
  EventType type = EventType::click;
  std::optional<std::string> view_id;

  bool operator==(const Event&) const = default;
};

struct Transition {
  std::string source;
  std::string target;
  Event event;

  bool operator==(const Transition&) const = default;
};

/// Ground truth for benchmark corpora. Detection code never reads it.
struct GroundTruth {
  std::vector<FraudType> fraud_types;

  bool operator==(const GroundTruth&) const = default;
};

struct AppMeta {
  std::string package;
  std::vector<std::string> permissions;
  std::vector<std::string> activities;
  std::vector<std::string> detected_ad_libs;
  std::optional<GroundTruth> label;

  bool declares_activity(std::string_view activity) const;
  bool operator==(const AppMeta&) const = default;
};

struct TrafficRecord {
  std::string id;
  std::string state_id;
  std::optional<std::string> view_id;
  HttpMethod method = HttpMethod::GET;
  std::string url;
  std::string response_content_type;
  std::int64_t response_length = 0;
  /// First 8 bytes of the response body, hex-encoded.
  std::string body_magic;
  /// Whether a confirmation dialog preceded the transfer.
  bool user_initiated = false;

  bool operator==(const TrafficRecord&) const = default;
};

/// UI state transition graph of one app. States keep discovery order and the
/// first state is the one reached by app_start.
struct UTGraph {
  AppMeta app;
  Screen screen;
  std::vector<UIState> states;
  std::vector<Transition> transitions;
  std::vector<TrafficRecord> traffic;

  const UIState* find_state(std::string_view id) const;
  const TrafficRecord* find_traffic(std::string_view id) const;
  /// Index of the state in `states`, or -1.
  int state_index(std::string_view id) const;

  bool operator==(const UTGraph&) const = default;
};

/// Checks every structural invariant of the graph. Returns one message per
/// violation, each naming the offending entity; empty when the graph is
/// well-formed.
std::vector<std::string> validate(const UTGraph& graph);

/// Invariants of a single view tree; messages are prefixed with `owner`.
void validate_tree(const ViewTree& tree, std::string_view owner,
                   std::vector<std::string>& violations);

/// Childless nodes of the state's view tree, topmost (largest z) first.
std::vector<ViewNode> leaf_views(const UIState& state);

}  // namespace adfraud
