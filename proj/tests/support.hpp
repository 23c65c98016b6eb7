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

// Test-side helpers: hand-built states, random graphs, and brute-force
// oracles that share no code with the library paths they check.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "adfraud/adview.hpp"
#include "adfraud/fraud.hpp"
#include "adfraud/rng.hpp"
#include "adfraud/utg.hpp"

namespace testing_support {

using namespace adfraud;

inline ViewNode node(std::string id, std::string cls, Bounds b, int z, bool clickable = false,
                     std::string rid = "") {
  ViewNode n;
  n.id = std::move(id);
  n.class_name = std::move(cls);
  n.resource_id = std::move(rid);
  n.bounds = b;
  n.z = z;
  n.clickable = clickable;
  return n;
}

/// State whose root (z=0, full screen) parents every given leaf.
inline UIState flat_state(std::string id, std::vector<ViewNode> leaves,
                          std::vector<std::string> traces = {"com.google.android.gms.ads.AdView.loadAd"},
                          std::string activity = "com.example.MainActivity",
                          StateKind kind = StateKind::content) {
  UIState s;
  s.id = std::move(id);
  s.activity = std::move(activity);
  s.kind = kind;
  s.ad_load_traces = std::move(traces);
  ViewNode root = node("root", "android.widget.FrameLayout", {0, 0, 1080, 1776}, 0);
  for (const auto& l : leaves) root.children.push_back(l.id);
  s.view_tree.root = "root";
  s.view_tree.nodes.push_back(root);
  for (auto& l : leaves) s.view_tree.nodes.push_back(std::move(l));
  return s;
}

inline AppMeta meta(std::vector<std::string> activities = {"com.example.MainActivity",
                                                           "com.example.OtherActivity"}) {
  AppMeta m;
  m.package = "com.example";
  m.permissions = {"android.permission.INTERNET", "android.permission.ACCESS_NETWORK_STATE"};
  m.activities = std::move(activities);
  m.detected_ad_libs = {"com.google.android.gms.ads"};
  return m;
}

inline Bounds random_bounds(Rng& rng, const Screen& s) {
  const int l = static_cast<int>(rng.uniform(0, s.width - 1));
  const int t = static_cast<int>(rng.uniform(0, s.height - 1));
  const int r = static_cast<int>(rng.uniform(l, s.width));
  const int b = static_cast<int>(rng.uniform(t, s.height));
  return {l, t, r, b};
}

/// Bounds biased toward the shapes the detector cares about.
inline Bounds random_ad_shape(Rng& rng, const Screen& s) {
  switch (rng.uniform(0, 4)) {
    case 0: {  // bottom banner
      const int w = static_cast<int>(rng.uniform(100, 1080));
      const int h = static_cast<int>(rng.uniform(10, 200));
      const int l = static_cast<int>(rng.uniform(0, s.width - w));
      const int bottom = s.height - static_cast<int>(rng.uniform(0, 20));
      return {l, bottom - h, l + w, bottom};
    }
    case 1: {  // centered
      const int w = 2 * static_cast<int>(rng.uniform(200, 540));
      const int h = static_cast<int>(rng.uniform(300, 1500));
      const int shift = static_cast<int>(rng.uniform(-80, 80));
      const int l = std::clamp((s.width - w) / 2 + shift, 0, s.width - w);
      const int t = static_cast<int>(rng.uniform(0, s.height - h));
      return {l, t, l + w, t + h};
    }
    case 2: return {0, 0, s.width, s.height - static_cast<int>(rng.uniform(0, 300))};
    default: return random_bounds(rng, s);
  }
}

inline const std::vector<std::pair<std::string, std::string>>& class_pool() {
  static const std::vector<std::pair<std::string, std::string>> pool = {
      {"android.widget.TextView", "title"},
      {"android.widget.Button", "btn_ok"},
      {"android.widget.ImageView", "icon"},
      {"android.webkit.WebView", "page"},
      {"com.google.android.gms.ads.AdView", "ad_view"},
      {"android.widget.FrameLayout", "ad_container"},
      {"android.widget.TextView", "header_shadow"},
      {"com.pop.is.ar", "pop"},
      {"android.widget.ImageButton", "toolbar_action"},
      {"android.widget.LinearLayout", "dialog_panel"},
      {"android.widget.ViewFlipper", "gallery"},
      {"android.widget.Button", "btn_download"},
  };
  return pool;
}

/// Random well-formed view tree with unique z values.
inline ViewTree random_tree(Rng& rng, const Screen& s, int views) {
  ViewTree t;
  t.root = "v0";
  t.nodes.push_back(node("v0", "android.widget.FrameLayout", {0, 0, s.width, s.height}, 0));
  std::vector<int> zs;
  for (int i = 1; i < views; ++i) zs.push_back(i);
  for (std::size_t i = zs.size(); i > 1; --i) {
    std::swap(zs[i - 1], zs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  for (int i = 1; i < views; ++i) {
    const auto parent = static_cast<std::size_t>(rng.uniform(0, i - 1));
    const auto& [cls, rid] = rng.pick(class_pool());
    auto n = node("v" + std::to_string(i), cls,
                  rng.chance(0.5) ? random_ad_shape(rng, s) : random_bounds(rng, s),
                  zs[static_cast<std::size_t>(i - 1)], rng.chance(0.5), rid);
    n.text = rng.chance(0.3) ? "t" + std::to_string(i) : "";
    t.nodes[parent].children.push_back(n.id);
    t.nodes.push_back(std::move(n));
  }
  return t;
}

/// Random graph that passes validate(): state 0 is the start state, external
/// states use an undeclared activity, traffic belongs to existing states.
inline UTGraph random_graph(std::uint64_t seed, int states, int views_per_state,
                            int transitions_per_state = 3) {
  Rng rng(seed);
  UTGraph g;
  g.app = meta({"com.example.MainActivity", "com.example.OtherActivity", "com.example.ExitActivity"});
  static const StateKind kinds[] = {StateKind::content, StateKind::content, StateKind::launch,
                                    StateKind::login,   StateKind::exit,    StateKind::error,
                                    StateKind::thankyou};
  for (int i = 0; i < states; ++i) {
    UIState s;
    s.id = "s" + std::to_string(i);
    if (i > 0 && rng.chance(0.1)) {
      s.activity = "com.android.launcher3.Launcher";
      s.kind = StateKind::external;
    } else {
      s.activity = g.app.activities[static_cast<std::size_t>(rng.uniform(0, 2))];
      s.kind = kinds[rng.uniform(0, 6)];
    }
    if (rng.chance(0.7)) s.ad_load_traces.push_back("com.google.android.gms.ads.AdView.loadAd");
    if (rng.chance(0.1)) s.ad_load_traces.push_back("org.example.Loader.load");
    s.view_tree = random_tree(rng, g.screen, std::max(1, views_per_state));
    g.states.push_back(std::move(s));
  }
  static const EventType events[] = {EventType::click, EventType::long_click, EventType::scroll,
                                     EventType::drag, EventType::back, EventType::app_start};
  for (int i = 0; i < states; ++i) {
    for (int k = 0; k < transitions_per_state; ++k) {
      Transition t;
      t.source = g.states[static_cast<std::size_t>(i)].id;
      t.event.type = events[rng.uniform(0, 5)];
      if (t.event.type == EventType::app_start) {
        t.target = g.states.front().id;
      } else {
        t.target = g.states[static_cast<std::size_t>(rng.uniform(0, states - 1))].id;
        if (t.event.type != EventType::back) {
          const auto& nodes = g.states[static_cast<std::size_t>(i)].view_tree.nodes;
          t.event.view_id = nodes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nodes.size()) - 1))].id;
        }
      }
      g.transitions.push_back(std::move(t));
    }
  }
  const int traffic = static_cast<int>(rng.uniform(0, states));
  for (int i = 0; i < traffic; ++i) {
    TrafficRecord r;
    r.id = "tr" + std::to_string(i);
    auto& st = g.states[static_cast<std::size_t>(rng.uniform(0, states - 1))];
    r.state_id = st.id;
    if (rng.chance(0.7)) {
      r.view_id = st.view_tree.nodes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(st.view_tree.nodes.size()) - 1))].id;
    }
    r.method = rng.chance(0.8) ? HttpMethod::GET : HttpMethod::POST;
    r.url = "http://example.com/r" + std::to_string(i);
    static const char* types[] = {"text/html", "application/vnd.android.package-archive",
                                  "application/octet-stream", "image/png"};
    r.response_content_type = types[rng.uniform(0, 3)];
    r.response_length = rng.uniform(0, 5000000);
    r.body_magic = rng.chance(0.4) ? "504B030414000808" : "89504E470D0A1A0A";
    r.user_initiated = rng.chance(0.3);
    st.traffic_ids.push_back(r.id);
    g.traffic.push_back(std::move(r));
  }
  return g;
}

// ---- oracles -------------------------------------------------------------

/// Pixel set of a rectangle on a small grid, as a bitmap.
inline std::vector<bool> raster(const Bounds& b, int n) {
  std::vector<bool> px(static_cast<std::size_t>(n * n), false);
  for (int y = std::max(0, b.top); y < std::min(n, b.bottom); ++y) {
    for (int x = std::max(0, b.left); x < std::min(n, b.right); ++x) {
      px[static_cast<std::size_t>(y * n + x)] = true;
    }
  }
  return px;
}

inline long raster_overlap(const Bounds& a, const Bounds& b, int n = 64) {
  const auto pa = raster(a, n);
  const auto pb = raster(b, n);
  long c = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) c += pa[i] && pb[i];
  return c;
}

inline long raster_union(const std::vector<Bounds>& rects, int n = 64) {
  std::vector<bool> px(static_cast<std::size_t>(n * n), false);
  for (const auto& r : rects) {
    const auto p = raster(r, n);
    for (std::size_t i = 0; i < p.size(); ++i) px[i] = px[i] || p[i];
  }
  return std::count(px.begin(), px.end(), true);
}

inline bool oracle_is_leaf(const ViewTree& t, const std::string& id) {
  for (const auto& n : t.nodes) {
    if (n.id == id) return n.children.empty();
  }
  return false;
}

inline bool oracle_overlaps(const Bounds& a, const Bounds& b) {
  // Two half-open rectangles share a pixel iff both projections overlap.
  const bool x = std::max(a.left, b.left) < std::min(a.right, b.right);
  const bool y = std::max(a.top, b.top) < std::min(a.bottom, b.bottom);
  return x && y;
}

/// Every (ad, covering view) pair by scanning all node pairs.
inline std::set<std::pair<std::string, std::string>> pair_scan(const UIState& s,
                                                               const std::set<std::string>& ad_ids,
                                                               bool hidden) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& a : s.view_tree.nodes) {
    if (!ad_ids.count(a.id)) continue;
    for (const auto& w : s.view_tree.nodes) {
      if (w.id == a.id || ad_ids.count(w.id) || !oracle_is_leaf(s.view_tree, w.id)) continue;
      if (!oracle_overlaps(a.bounds, w.bounds)) continue;
      const bool hit = hidden ? w.z > a.z : (w.clickable && a.z >= w.z);
      if (hit) out.insert({a.id, w.id});
    }
  }
  return out;
}

inline std::set<std::pair<std::string, std::string>> finding_pairs(
    const std::vector<FraudFinding>& findings) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& f : findings) {
    for (std::size_t i = 1; i < f.view_ids.size(); ++i) out.insert({f.view_ids[0], f.view_ids[i]});
  }
  return out;
}

/// Incoming distinct display edges per state, enumerated directly.
inline std::map<std::string, int> oracle_edge_counts(const UTGraph& g) {
  std::map<std::string, std::set<std::string>> keys;
  for (const auto& t : g.transitions) {
    if (t.source == t.target) continue;
    std::string k = t.event.type == EventType::app_start
                        ? std::string("<start>")
                        : t.source + "|" + std::string(to_string(t.event.type)) + "|" +
                              t.event.view_id.value_or("");
    keys[t.target].insert(k);
  }
  std::map<std::string, int> out;
  for (const auto& [s, k] : keys) out[s] = static_cast<int>(k.size());
  return out;
}

// Independent re-statement of the ad-view detector: regex tokenization, direct
// ratio arithmetic, no shared helpers.
inline std::vector<std::string> oracle_tokens(const std::string& s) {
  std::vector<std::string> out;
  static const std::regex word("[A-Z]+(?![a-z])|[A-Z]?[a-z]+");
  for (std::sregex_iterator it(s.begin(), s.end(), word), end; it != end; ++it) {
    std::string t = it->str();
    for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back(t);
  }
  return out;
}

inline bool oracle_candidate(const ViewNode& v, const AdFeatureConfig& cfg) {
  for (const auto& src : {v.class_name, v.resource_id}) {
    for (const auto& t : oracle_tokens(src)) {
      if (t.find("ad") != std::string::npos && !cfg.whitelist.count(t)) return true;
    }
  }
  const auto dot = v.class_name.rfind('.');
  const std::string last = dot == std::string::npos ? v.class_name : v.class_name.substr(dot + 1);
  for (const auto& c : cfg.ad_type_classes) {
    if (last == c) return true;
  }
  if (cfg.custom_class_candidates && v.class_name.find('.') != std::string::npos) {
    bool framework = false;
    for (const char* p : {"android.", "androidx.", "java.", "javax.", "com.android.", "dalvik.", "kotlin."}) {
      framework = framework || v.class_name.rfind(p, 0) == 0;
    }
    if (!framework) return true;
  }
  return false;
}

inline std::optional<AdKind> oracle_kind(const Bounds& raw, const AdFeatureConfig& cfg,
                                         const Screen& sc = {1080, 1776}) {
  const Bounds b{std::clamp(raw.left, 0, sc.width), std::clamp(raw.top, 0, sc.height),
                 std::clamp(raw.right, 0, sc.width), std::clamp(raw.bottom, 0, sc.height)};
  const double area = double(b.right - b.left) * double(b.bottom - b.top);
  if (area <= 0) return std::nullopt;
  const double r = area / (double(sc.width) * sc.height);
  if (r >= cfg.full_ratio.lo && r <= cfg.full_ratio.hi) return AdKind::full_screen;
  if (r >= cfg.interstitial_ratio.lo && r <= cfg.interstitial_ratio.hi &&
      std::fabs((b.left + b.right) / 2.0 - sc.width / 2.0) <= cfg.center_tolerance * sc.width) {
    return AdKind::interstitial;
  }
  const double band = cfg.edge_band * sc.height;
  if (r >= cfg.banner_ratio.lo && r <= cfg.banner_ratio.hi &&
      (b.top <= band || sc.height - b.bottom <= band)) {
    return AdKind::banner;
  }
  return std::nullopt;
}


/// Detector output predicted leaf by leaf: (-z, id, kind) sorted topmost first.
inline std::vector<std::tuple<int, std::string, AdKind>> oracle_detect(const UIState& s,
                                                                      const AdFeatureConfig& cfg) {
  std::vector<std::tuple<int, std::string, AdKind>> out;
  for (const auto& n : s.view_tree.nodes) {
    if (!n.children.empty() || !oracle_candidate(n, cfg)) continue;
    if (auto k = oracle_kind(n.bounds, cfg)) out.emplace_back(-n.z, n.id, *k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Two-state drive-by scenario; each flag toggles one condition of the rule.
/// `variant` picks between equivalent encodings of each condition.
inline UTGraph drive_by_case(bool has_ad, bool download, bool same_activity, bool touch,
                             int variant = 0) {
  UTGraph g;
  g.app = meta();
  std::vector<ViewNode> leaves = {node("btn", "android.widget.Button", {40, 1390, 220, 1530}, 1, true)};
  if (has_ad) leaves.push_back(node("ad_banner", "com.google.android.gms.ads.AdView", {0, 1676, 1080, 1776}, 2, true));
  g.states.push_back(flat_state("a", leaves));
  g.states.push_back(flat_state("b", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1)}, {},
                                same_activity ? "com.example.MainActivity" : "com.example.OtherActivity"));
  const std::string view = has_ad ? "ad_banner" : "btn";
  const EventType ev = touch ? (variant & 1 ? EventType::long_click : EventType::click)
                             : (variant & 1 ? EventType::drag : EventType::scroll);
  g.transitions.push_back({"a", "b", {ev, view}});
  TrafficRecord r;
  r.id = "t1";
  r.state_id = (variant & 2) ? "b" : "a";
  if (!(variant & 2)) r.view_id = view;
  r.url = "http://cdn.example.com/payload";
  r.response_length = 2000000;
  if (download) {
    r.response_content_type = (variant & 4) ? "application/vnd.android.package-archive" : "text/plain";
    r.body_magic = (variant & 4) ? "0000000000000000" : "504B030414000808";
  } else {
    r.response_content_type = (variant & 4) ? "image/png" : "text/html";
    r.body_magic = (variant & 4) ? "89504E470D0A1A0A" : "3C21444F43545950";
    r.user_initiated = (variant & 8) != 0;
  }
  g.traffic.push_back(r);
  g.states[(variant & 2) ? 1 : 0].traffic_ids.push_back("t1");
  return g;
}

}  // namespace testing_support
