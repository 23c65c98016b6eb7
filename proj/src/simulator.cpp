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

#include "adfraud/simulator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "adfraud/adview.hpp"
#include "adfraud/rng.hpp"

namespace adfraud {

std::string_view to_string(EffectKind k) {
  switch (k) {
    case EffectKind::navigate: return "navigate";
    case EffectKind::show_ad: return "show_ad";
    case EffectKind::exit: return "exit";
  }
  return "?";
}

std::optional<EffectKind> parse_effect_kind(std::string_view s) {
  for (auto k : {EffectKind::navigate, EffectKind::show_ad, EffectKind::exit}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string_view to_string(FaultKind k) {
  return k == FaultKind::ad_load_failure ? "ad_load_failure" : "inherited_ad";
}

std::optional<FaultKind> parse_fault_kind(std::string_view s) {
  for (auto k : {FaultKind::ad_load_failure, FaultKind::inherited_ad}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Strategy s) { return s == Strategy::ad_first ? "ad_first" : "random"; }

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "ad_first") return Strategy::ad_first;
  if (s == "random") return Strategy::random;
  return std::nullopt;
}

const ScreenTemplate* AppModel::find_screen(std::string_view id) const {
  for (const auto& s : screens) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const Handler* AppModel::find_handler(std::string_view screen, std::string_view view_id,
                                      EventType event) const {
  for (const auto& h : handlers) {
    if (h.screen == screen && h.view_id == view_id && h.event == event) return &h;
  }
  return nullptr;
}

std::vector<std::string> validate_model(const AppModel& model) {
  std::vector<std::string> v;
  if (model.meta.package.empty()) v.push_back("model: package is empty");
  if (model.screen.width <= 0 || model.screen.height <= 0) {
    v.push_back("model: screen dimensions must be positive");
  }
  std::set<std::string> ids;
  for (const auto& s : model.screens) {
    if (!ids.insert(s.id).second) v.push_back("screen " + s.id + ": duplicate screen id");
    validate_tree(s.view_tree, "screen " + s.id, v);
    const bool declared = model.meta.declares_activity(s.activity);
    if (declared == (s.kind == StateKind::external)) {
      v.push_back("screen " + s.id + ": activity " + s.activity +
                  (declared ? " is declared but kind is external" : " is not declared"));
    }
    for (const auto& a : s.ad_view_ids) {
      const ViewNode* n = s.view_tree.find(a);
      if (!n || !n->is_leaf()) v.push_back("screen " + s.id + ": ad view " + a + " is not a leaf");
    }
  }
  if (!model.find_screen(model.launch_screen)) {
    v.push_back("model: unknown launch screen " + model.launch_screen);
  }
  std::set<std::tuple<std::string, std::string, EventType>> keys;
  for (std::size_t i = 0; i < model.handlers.size(); ++i) {
    const auto& h = model.handlers[i];
    const std::string who = "handler " + std::to_string(i);
    const ScreenTemplate* s = model.find_screen(h.screen);
    if (!s) {
      v.push_back(who + ": unknown screen " + h.screen);
    } else if (h.event == EventType::back) {
      if (!h.view_id.empty()) v.push_back(who + ": back handler names view " + h.view_id);
    } else if (h.event == EventType::app_start || h.event == EventType::app_exit) {
      v.push_back(who + ": event " + std::string(to_string(h.event)) + " cannot be handled");
    } else if (!s->view_tree.find(h.view_id)) {
      v.push_back(who + ": unknown view '" + h.view_id + "' in screen " + h.screen);
    }
    if (!model.find_screen(h.effect.target)) {
      v.push_back(who + ": unknown target screen " + h.effect.target);
    }
    if (!keys.insert({h.screen, h.view_id, h.event}).second) {
      v.push_back(who + ": duplicate handler for " + h.screen + "/" + h.view_id);
    }
  }
  return v;
}

namespace {

struct Candidate {
  EventType type = EventType::click;
  std::string view_id;  // empty for back

  auto key() const { return std::make_pair(static_cast<int>(type), view_id); }
};

bool is_scrollable(const ViewNode& n) {
  const auto pos = n.class_name.find_last_of(".$");
  const std::string last = pos == std::string::npos ? n.class_name : n.class_name.substr(pos + 1);
  return last == "ScrollView" || last == "ListView" || last == "RecyclerView" ||
         last == "ViewPager";
}

// Events an automation tool can fire on the screen, in tree order.
std::vector<Candidate> candidates(const ScreenTemplate& s) {
  std::vector<Candidate> out;
  if (s.kind == StateKind::external) return out;
  for (const auto& n : s.view_tree.nodes) {
    if (n.is_leaf() && n.clickable) out.push_back({EventType::click, n.id});
    if (is_scrollable(n)) out.push_back({EventType::scroll, n.id});
  }
  out.push_back({EventType::back, ""});
  return out;
}

const AdFeatureConfig& feature_config() {
  static const AdFeatureConfig cfg = AdFeatureConfig::defaults();
  return cfg;
}

bool ad_like(const ScreenTemplate& s, const Candidate& c) {
  if (c.view_id.empty()) return false;
  const ViewNode* n = s.view_tree.find(c.view_id);
  const auto& cfg = feature_config();
  return n && (string_feature(*n, cfg) || type_feature(*n, cfg) || custom_class_feature(*n, cfg));
}

class Explorer {
 public:
  Explorer(const AppModel& model, const ExplorationConfig& cfg) : m_(model), cfg_(cfg) {
    g_.app = model.meta;
    g_.screen = model.screen;
    start_ = model.launch_screen;
  }

  ExplorationResult run() {
    events_ = 1;  // the initial launch
    visit(start_);
    current_ = start_;
    if (cfg_.strategy == Strategy::ad_first) {
      run_ad_first();
    } else {
      run_random();
    }
    ExplorationResult r;
    r.graph = std::move(g_);
    r.events = events_;
    r.elapsed_seconds = events_ * cfg_.transition_wait;
    return r;
  }

 private:
  using Step = std::pair<std::string, Candidate>;

  bool budget_left() const { return events_ < cfg_.event_budget; }

  void visit(const std::string& screen) {
    if (index_.count(screen)) return;
    const ScreenTemplate* t = m_.find_screen(screen);
    index_[screen] = g_.states.size();
    UIState st;
    st.id = t->id;
    st.activity = t->activity;
    st.kind = t->kind;
    st.view_tree = t->view_tree;
    st.ad_load_traces = t->ad_load_traces;
    g_.states.push_back(std::move(st));
    enqueue(*t);
  }

  void enqueue(const ScreenTemplate& t) {
    if (cfg_.strategy != Strategy::ad_first) return;
    auto cands = candidates(t);
    std::stable_partition(cands.begin(), cands.end(),
                          [&](const Candidate& c) { return ad_like(t, c); });
    const bool priority = !t.ad_load_traces.empty() || t.id == start_ ||
                          t.kind == StateKind::exit;
    if (priority) {
      for (auto it = cands.rbegin(); it != cands.rend(); ++it) frontier_.push_front({t.id, *it});
    } else {
      for (const auto& c : cands) frontier_.push_back({t.id, c});
    }
    // Exit bias: the back event of the first screen seen per activity goes first.
    if (t.kind != StateKind::external && activities_.insert(t.activity).second) {
      frontier_.push_front({t.id, Candidate{EventType::back, ""}});
    }
  }

  void record(const std::string& src, const std::string& dst, const Event& e) {
    const auto key = std::make_tuple(src, dst, static_cast<int>(e.type), e.view_id.value_or(""));
    if (!edges_.insert(key).second) return;
    g_.transitions.push_back({src, dst, e});
    if (e.type != EventType::app_start && src != dst) adj_[src].push_back({dst, e});
  }

  void fire(const Candidate& c) {
    ++events_;
    fired_.insert({current_, c.key()});
    const Handler* h = m_.find_handler(current_, c.view_id, c.type);
    const std::string target = h ? h->effect.target : current_;
    Event e{c.type, c.view_id.empty() ? std::nullopt : std::optional<std::string>(c.view_id)};
    if (h && h->effect.traffic &&
        traffic_done_.insert({current_, c.view_id, static_cast<int>(c.type)}).second) {
      const auto& tt = *h->effect.traffic;
      TrafficRecord rec;
      rec.id = "tr" + std::to_string(g_.traffic.size());
      rec.state_id = current_;
      rec.view_id = e.view_id;
      rec.method = tt.method;
      rec.url = tt.url;
      rec.response_content_type = tt.response_content_type;
      rec.response_length = tt.response_length;
      rec.body_magic = tt.body_magic;
      rec.user_initiated = tt.user_initiated;
      g_.states[index_[current_]].traffic_ids.push_back(rec.id);
      g_.traffic.push_back(std::move(rec));
    }
    visit(target);
    record(current_, target, e);
    current_ = target;
  }

  void restart() {
    ++events_;
    record(current_, start_, Event{EventType::app_start, std::nullopt});
    current_ = start_;
  }

  // Shortest known event path between two recorded states.
  std::optional<std::vector<Candidate>> path(const std::string& from, const std::string& to) {
    if (from == to) return std::vector<Candidate>{};
    std::map<std::string, std::pair<std::string, Event>> prev;
    std::queue<std::string> q;
    q.push(from);
    prev[from] = {"", Event{}};
    while (!q.empty()) {
      const auto s = q.front();
      q.pop();
      for (const auto& [dst, e] : adj_[s]) {
        if (prev.count(dst)) continue;
        prev[dst] = {s, e};
        if (dst == to) {
          std::vector<Candidate> steps;
          for (std::string cur = to; cur != from; cur = prev[cur].first) {
            const auto& ev = prev[cur].second;
            steps.push_back({ev.type, ev.view_id.value_or("")});
          }
          std::reverse(steps.begin(), steps.end());
          return steps;
        }
        q.push(dst);
      }
    }
    return std::nullopt;
  }

  void run_ad_first() {
    while (budget_left() && !frontier_.empty()) {
      const Step step = frontier_.front();
      frontier_.pop_front();
      if (fired_.count({step.first, step.second.key()})) continue;
      if (current_ != step.first) {
        auto direct = path(current_, step.first);
        auto via_start = path(start_, step.first);
        if (!direct && !via_start) continue;
        if (!direct || (via_start && via_start->size() + 1 < direct->size())) {
          restart();
          direct = via_start;
        }
        for (const auto& c : *direct) {
          if (!budget_left()) return;
          fire(c);
        }
        if (current_ != step.first) continue;
      }
      if (!budget_left()) return;
      fire(step.second);
    }
  }

  void run_random() {
    Rng rng(cfg_.seed);
    while (budget_left()) {
      const auto cands = candidates(*m_.find_screen(current_));
      if (cands.empty()) {
        restart();
      } else {
        fire(cands[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cands.size()) - 1))]);
      }
    }
  }

  const AppModel& m_;
  const ExplorationConfig& cfg_;
  UTGraph g_;
  std::string start_;
  std::string current_;
  int events_ = 0;
  std::map<std::string, std::size_t> index_;
  std::deque<Step> frontier_;
  std::set<std::string> activities_;
  std::set<std::pair<std::string, std::pair<int, std::string>>> fired_;
  std::set<std::tuple<std::string, std::string, int, std::string>> edges_;
  std::set<std::tuple<std::string, std::string, int>> traffic_done_;
  std::map<std::string, std::vector<std::pair<std::string, Event>>> adj_;
};

}  // namespace

ExplorationResult explore(const AppModel& model, const ExplorationConfig& cfg) {
  if (cfg.event_budget < 1) throw std::invalid_argument("event_budget must be >= 1");
  if (!(cfg.transition_wait >= 0)) throw std::invalid_argument("transition_wait must be >= 0");
  if (auto v = validate_model(model); !v.empty()) {
    throw std::invalid_argument("invalid app model: " + v.front());
  }
  return Explorer(model, cfg).run();
}

namespace {

std::map<std::string, int> event_distances(const AppModel& model) {
  std::map<std::string, int> dist{{model.launch_screen, 1}};
  std::queue<std::string> q;
  q.push(model.launch_screen);
  while (!q.empty()) {
    const auto s = q.front();
    q.pop();
    for (const auto& h : model.handlers) {
      if (h.screen != s || dist.count(h.effect.target)) continue;
      dist[h.effect.target] = dist[s] + 1;
      q.push(h.effect.target);
    }
  }
  return dist;
}

}  // namespace

std::vector<std::string> reachable_screens(const AppModel& model) {
  const auto dist = event_distances(model);
  std::vector<std::string> out;
  for (const auto& s : model.screens) {
    if (dist.count(s.id)) out.push_back(s.id);
  }
  return out;
}

std::optional<int> shortest_event_path(const AppModel& model, std::string_view screen) {
  const auto dist = event_distances(model);
  const auto it = dist.find(std::string(screen));
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

double ad_state_coverage(const AppModel& model, const UTGraph& graph) {
  int total = 0;
  int seen = 0;
  for (const auto& id : reachable_screens(model)) {
    if (model.find_screen(id)->ad_view_ids.empty()) continue;
    ++total;
    if (graph.find_state(id)) ++seen;
  }
  return total == 0 ? 1.0 : static_cast<double>(seen) / total;
}

void FaultConfig::validate() const {
  auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!ok(ad_load_failure_rate) || !ok(inherited_ad_rate)) {
    throw std::invalid_argument("fault rates must be in [0, 1]");
  }
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ (seed * 0x9e3779b97f4a7c15ULL);
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool contains(const std::vector<std::string>& v, std::string_view x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Replaces a rendered creative with the empty 2-px slot its container
// collapses to when loading fails.
void collapse_ad(ScreenTemplate& s, const std::string& view_id) {
  const std::string slot = view_id + "_slot";
  for (auto& n : s.view_tree.nodes) {
    for (auto& c : n.children) {
      if (c == view_id) c = slot;
    }
    if (n.id != view_id) continue;
    n.id = slot;
    n.class_name = "android.widget.FrameLayout";
    n.resource_id = "ad_container";
    n.text.clear();
    n.clickable = false;
    n.bounds.top = std::max(n.bounds.top, n.bounds.bottom - 2);
  }
  s.ad_view_ids.erase(std::remove(s.ad_view_ids.begin(), s.ad_view_ids.end(), view_id),
                      s.ad_view_ids.end());
}

}  // namespace

AppModel inject_faults(const AppModel& model, const FaultConfig& cfg) {
  cfg.validate();
  AppModel out = model;
  if (cfg.ad_load_failure_rate <= 0.0 && cfg.inherited_ad_rate <= 0.0) return out;
  Rng rng(mix(cfg.seed, model.meta.package));

  // One draw per ad view: a failed load affects every screen showing it.
  std::vector<std::string> ad_ids;
  for (const auto& s : out.screens) {
    for (const auto& a : s.ad_view_ids) {
      if (!contains(ad_ids, a)) ad_ids.push_back(a);
    }
  }
  for (const auto& a : ad_ids) {
    if (!rng.chance(cfg.ad_load_failure_rate)) continue;
    for (auto& s : out.screens) {
      if (!contains(s.ad_view_ids, a)) continue;
      collapse_ad(s, a);
      out.faults.push_back({FaultKind::ad_load_failure, s.id, a});
    }
    std::erase_if(out.handlers, [&](const Handler& h) { return h.view_id == a; });
  }

  std::set<std::string> inherited;
  for (const auto& h : model.handlers) {
    if (h.event != EventType::scroll && h.event != EventType::drag) continue;
    if (h.screen == h.effect.target || inherited.count(h.effect.target)) continue;
    const ScreenTemplate* src = out.find_screen(h.screen);
    auto it = std::find_if(out.screens.begin(), out.screens.end(),
                           [&](const ScreenTemplate& s) { return s.id == h.effect.target; });
    if (!src || it == out.screens.end() || it->ad_load_traces.empty()) continue;
    std::string shared;
    for (const auto& a : it->ad_view_ids) {
      if (contains(src->ad_view_ids, a)) {
        shared = a;
        break;
      }
    }
    if (shared.empty() || !rng.chance(cfg.inherited_ad_rate)) continue;
    it->ad_load_traces.clear();
    inherited.insert(it->id);
    out.faults.push_back({FaultKind::inherited_ad, it->id, shared});
  }
  return out;
}

}  // namespace adfraud
