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

#include "adfraud/utg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace adfraud {

namespace {

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table,
                        std::string_view s) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return "?";
}

constexpr std::array<std::pair<StateKind, std::string_view>, 7> kStateKinds{{
    {StateKind::launch, "launch"},
    {StateKind::login, "login"},
    {StateKind::content, "content"},
    {StateKind::exit, "exit"},
    {StateKind::error, "error"},
    {StateKind::thankyou, "thankyou"},
    {StateKind::external, "external"},
}};

constexpr std::array<std::pair<EventType, std::string_view>, 7> kEventTypes{{
    {EventType::click, "click"},
    {EventType::long_click, "long_click"},
    {EventType::scroll, "scroll"},
    {EventType::drag, "drag"},
    {EventType::back, "back"},
    {EventType::app_start, "app_start"},
    {EventType::app_exit, "app_exit"},
}};

constexpr std::array<std::pair<HttpMethod, std::string_view>, 2> kMethods{{
    {HttpMethod::GET, "GET"},
    {HttpMethod::POST, "POST"},
}};

constexpr std::array<std::pair<FraudType, std::string_view>, 9> kFraudTypes{{
    {FraudType::hidden, "hidden"},
    {FraudType::size, "size"},
    {FraudType::number, "number"},
    {FraudType::overlap, "overlap"},
    {FraudType::interaction, "interaction"},
    {FraudType::drive_by, "drive_by"},
    {FraudType::outside, "outside"},
    {FraudType::frequent, "frequent"},
    {FraudType::non_content, "non_content"},
}};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string_view to_string(StateKind k) { return name_of(kStateKinds, k); }
std::string_view to_string(EventType e) { return name_of(kEventTypes, e); }
std::string_view to_string(HttpMethod m) { return name_of(kMethods, m); }
std::string_view to_string(FraudType t) { return name_of(kFraudTypes, t); }
std::optional<StateKind> parse_state_kind(std::string_view s) { return lookup(kStateKinds, s); }
std::optional<EventType> parse_event_type(std::string_view s) { return lookup(kEventTypes, s); }
std::optional<HttpMethod> parse_http_method(std::string_view s) { return lookup(kMethods, s); }
std::optional<FraudType> parse_fraud_type(std::string_view s) { return lookup(kFraudTypes, s); }

const ViewNode* ViewTree::find(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::optional<std::string> ViewTree::parent_of(std::string_view id) const {
  for (const auto& n : nodes) {
    if (std::find(n.children.begin(), n.children.end(), id) != n.children.end()) {
      return n.id;
    }
  }
  return std::nullopt;
}

bool AppMeta::declares_activity(std::string_view activity) const {
  return std::find(activities.begin(), activities.end(), activity) != activities.end();
}

const UIState* UTGraph::find_state(std::string_view id) const {
  const int i = state_index(id);
  return i < 0 ? nullptr : &states[static_cast<std::size_t>(i)];
}

const TrafficRecord* UTGraph::find_traffic(std::string_view id) const {
  for (const auto& t : traffic) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

int UTGraph::state_index(std::string_view id) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

void validate_tree(const ViewTree& tree, std::string_view owner,
                   std::vector<std::string>& violations) {
  const std::string who(owner);
  if (tree.nodes.empty()) {
    violations.push_back(who + ": view tree is empty");
    return;
  }

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (!index.emplace(n.id, i).second) {
      violations.push_back(who + ": duplicate view id " + n.id);
    }
    if (!n.bounds.valid()) {
      violations.push_back(who + ": view " + n.id + " has invalid bounds");
    }
  }
  if (!index.count(tree.root)) {
    violations.push_back(who + ": unknown root " + tree.root);
  }

  std::map<std::string, int> parents;
  for (const auto& n : tree.nodes) {
    for (const auto& c : n.children) {
      if (!index.count(c)) {
        violations.push_back(who + ": view " + n.id + " lists unknown child " + c);
        continue;
      }
      ++parents[c];
    }
  }
  for (const auto& n : tree.nodes) {
    const int count = parents.count(n.id) ? parents[n.id] : 0;
    if (n.id == tree.root) {
      if (count > 0) violations.push_back(who + ": root " + n.id + " has a parent");
    } else if (count == 0) {
      violations.push_back(who + ": view " + n.id + " has no parent");
    } else if (count > 1) {
      violations.push_back(who + ": view " + n.id + " has " + std::to_string(count) +
                           " parents");
    }
  }

  // Connectivity from the root; catches cycles detached from it.
  if (index.count(tree.root)) {
    std::set<std::string> seen{tree.root};
    std::vector<std::string> stack{tree.root};
    while (!stack.empty()) {
      const auto id = stack.back();
      stack.pop_back();
      for (const auto& c : tree.nodes[index[id]].children) {
        if (index.count(c) && seen.insert(c).second) stack.push_back(c);
      }
    }
    for (const auto& n : tree.nodes) {
      if (!seen.count(n.id)) {
        violations.push_back(who + ": view " + n.id + " is unreachable from root");
      }
    }
  }

  std::map<int, std::vector<std::string>> by_z;
  for (const auto& n : tree.nodes) by_z[n.z].push_back(n.id);
  for (const auto& [z, ids] : by_z) {
    if (ids.size() > 1) {
      violations.push_back(who + ": views " + join(ids, ", ") + " share z=" + std::to_string(z));
    }
  }
}

std::vector<std::string> validate(const UTGraph& graph) {
  std::vector<std::string> v;
  if (graph.app.package.empty()) v.push_back("app: package is empty");
  if (graph.app.activities.empty()) v.push_back("app: activities list is empty");
  if (graph.screen.width <= 0 || graph.screen.height <= 0) {
    v.push_back("screen: dimensions must be positive");
  }
  if (graph.states.empty()) {
    v.push_back("graph has no states");
  }

  std::set<std::string> state_ids;
  for (const auto& s : graph.states) {
    if (!state_ids.insert(s.id).second) v.push_back("state " + s.id + ": duplicate state id");
  }
  std::map<std::string, const TrafficRecord*> traffic;
  for (const auto& t : graph.traffic) {
    if (!traffic.emplace(t.id, &t).second) {
      v.push_back("traffic " + t.id + ": duplicate traffic id");
    }
    if (!state_ids.count(t.state_id)) {
      v.push_back("traffic " + t.id + ": unknown state " + t.state_id);
    }
  }

  for (const auto& s : graph.states) {
    validate_tree(s.view_tree, "state " + s.id, v);
    const bool declared = graph.app.declares_activity(s.activity);
    if (declared && s.kind == StateKind::external) {
      v.push_back("state " + s.id + ": kind external but activity " + s.activity +
                  " is declared");
    } else if (!declared && s.kind != StateKind::external) {
      v.push_back("state " + s.id + ": activity " + s.activity +
                  " is not declared but kind is " + std::string(to_string(s.kind)));
    }
    for (const auto& tid : s.traffic_ids) {
      const auto it = traffic.find(tid);
      if (it == traffic.end()) {
        v.push_back("state " + s.id + ": unknown traffic id " + tid);
      } else if (it->second->state_id != s.id) {
        v.push_back("state " + s.id + ": traffic " + tid + " belongs to state " +
                    it->second->state_id);
      }
    }
  }

  for (std::size_t i = 0; i < graph.transitions.size(); ++i) {
    const auto& t = graph.transitions[i];
    const std::string who = "transition " + std::to_string(i);
    const UIState* src = graph.find_state(t.source);
    if (!src) v.push_back(who + ": unknown source " + t.source);
    if (!graph.find_state(t.target)) v.push_back(who + ": unknown target " + t.target);
    if (src && t.event.view_id && !src->view_tree.find(*t.event.view_id)) {
      v.push_back(who + ": unknown view " + *t.event.view_id + " in source " + t.source);
    }
    if (t.event.type == EventType::app_start && !graph.states.empty() &&
        t.target != graph.states.front().id) {
      v.push_back(who + ": app_start reaches " + t.target + ", expected start state " +
                  graph.states.front().id);
    }
  }
  return v;
}

std::vector<ViewNode> leaf_views(const UIState& state) {
  std::vector<ViewNode> leaves;
  for (const auto& n : state.view_tree.nodes) {
    if (n.is_leaf()) leaves.push_back(n);
  }
  std::stable_sort(leaves.begin(), leaves.end(),
                   [](const ViewNode& a, const ViewNode& b) { return a.z > b.z; });
  return leaves;
}

}  // namespace adfraud
