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

#include "adfraud/adview.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "json_support.hpp"

namespace adfraud {

namespace {

constexpr std::array<std::string_view, 7> kFrameworkPrefixes = {
    "android.", "androidx.", "java.", "javax.", "com.android.", "dalvik.", "kotlin.",
};

std::string_view final_segment(std::string_view class_name) {
  const auto pos = class_name.find_last_of(".$");
  return pos == std::string_view::npos ? class_name : class_name.substr(pos + 1);
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string_view to_string(AdKind k) {
  switch (k) {
    case AdKind::banner: return "banner";
    case AdKind::interstitial: return "interstitial";
    case AdKind::full_screen: return "full_screen";
  }
  return "?";
}

std::optional<AdKind> parse_ad_kind(std::string_view s) {
  for (auto k : {AdKind::banner, AdKind::interstitial, AdKind::full_screen}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

AdFeatureConfig AdFeatureConfig::defaults() {
  AdFeatureConfig cfg;
  const auto& words = default_whitelist();
  cfg.whitelist.insert(words.begin(), words.end());
  cfg.ad_type_classes = {"ImageView", "WebView", "ViewFlipper"};
  for (const auto& net : known_ad_networks()) {
    for (const auto& p : net.package_prefixes) cfg.ad_load_signatures.push_back(p);
  }
  return cfg;
}

void AdFeatureConfig::validate() const {
  std::vector<std::string> problems;
  const std::array<std::pair<const char*, const RatioInterval*>, 3> intervals = {{
      {"banner_ratio", &banner_ratio},
      {"interstitial_ratio", &interstitial_ratio},
      {"full_ratio", &full_ratio},
  }};
  for (const auto& [name, iv] : intervals) {
    if (!(0.0 <= iv->lo && iv->lo <= iv->hi && iv->hi <= 1.0)) {
      problems.push_back(std::string(name) + " must satisfy 0 <= lo <= hi <= 1");
    }
  }
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      const auto& a = *intervals[i].second;
      const auto& b = *intervals[j].second;
      if (a.lo <= b.hi && b.lo <= a.hi) {
        problems.push_back(std::string(intervals[i].first) + " and " + intervals[j].first +
                           " overlap");
      }
    }
  }
  if (whitelist.empty()) problems.push_back("whitelist is empty");
  if (!(center_tolerance >= 0.0 && center_tolerance <= 0.5)) {
    problems.push_back("center_tolerance must be in [0, 0.5]");
  }
  if (!(edge_band >= 0.0 && edge_band <= 0.5)) problems.push_back("edge_band must be in [0, 0.5]");
  if (!problems.empty()) {
    std::string msg = "invalid ad feature config:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
}

namespace {

RatioInterval read_interval(const json::Field& f) {
  const auto v = f.items();
  if (v.size() != 2) f.fail("interval must be [lo, hi]");
  return {v[0].number(), v[1].number()};
}

}  // namespace

AdFeatureConfig parse_ad_config(std::string_view json_text) {
  const auto doc = json::parse_document(json_text);
  const json::Field root(doc, "");
  root.expect_object({}, {"whitelist", "ad_type_classes", "ad_load_signatures", "banner_ratio",
                          "interstitial_ratio", "full_ratio", "center_tolerance", "edge_band",
                          "custom_class_candidates", "honor_inherited_markers"});
  auto cfg = AdFeatureConfig::defaults();
  if (auto f = root.opt("whitelist")) {
    cfg.whitelist.clear();
    for (auto w : f->strings()) {
      std::transform(w.begin(), w.end(), w.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      cfg.whitelist.insert(std::move(w));
    }
  }
  if (auto f = root.opt("ad_type_classes")) cfg.ad_type_classes = f->strings();
  if (auto f = root.opt("ad_load_signatures")) cfg.ad_load_signatures = f->strings();
  if (auto f = root.opt("banner_ratio")) cfg.banner_ratio = read_interval(*f);
  if (auto f = root.opt("interstitial_ratio")) cfg.interstitial_ratio = read_interval(*f);
  if (auto f = root.opt("full_ratio")) cfg.full_ratio = read_interval(*f);
  if (auto f = root.opt("center_tolerance")) cfg.center_tolerance = f->number();
  if (auto f = root.opt("edge_band")) cfg.edge_band = f->number();
  if (auto f = root.opt("custom_class_candidates")) cfg.custom_class_candidates = f->boolean();
  if (auto f = root.opt("honor_inherited_markers")) cfg.honor_inherited_markers = f->boolean();
  cfg.validate();
  return cfg;
}

std::string ad_config_to_json(const AdFeatureConfig& cfg) {
  json::OJson j;
  j["whitelist"] = std::vector<std::string>(cfg.whitelist.begin(), cfg.whitelist.end());
  j["ad_type_classes"] = cfg.ad_type_classes;
  j["ad_load_signatures"] = cfg.ad_load_signatures;
  j["banner_ratio"] = {cfg.banner_ratio.lo, cfg.banner_ratio.hi};
  j["interstitial_ratio"] = {cfg.interstitial_ratio.lo, cfg.interstitial_ratio.hi};
  j["full_ratio"] = {cfg.full_ratio.lo, cfg.full_ratio.hi};
  j["center_tolerance"] = cfg.center_tolerance;
  j["edge_band"] = cfg.edge_band;
  j["custom_class_candidates"] = cfg.custom_class_candidates;
  j["honor_inherited_markers"] = cfg.honor_inherited_markers;
  return json::dump(j);
}

std::vector<std::string> identifier_tokens(std::string_view identifier) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < identifier.size(); ++i) {
    const char c = identifier[i];
    if (!is_alpha(c)) {
      flush();
      continue;
    }
    if (!cur.empty() && is_upper(c)) {
      const char prev = identifier[i - 1];
      const bool next_lower = i + 1 < identifier.size() && is_lower(identifier[i + 1]);
      // fooBar -> foo|Bar, HTMLParser -> HTML|Parser
      if (is_lower(prev) || (is_upper(prev) && next_lower)) flush();
    }
    cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  flush();
  return tokens;
}

bool string_feature(const ViewNode& view, const AdFeatureConfig& cfg) {
  for (const auto* source : {&view.class_name, &view.resource_id}) {
    for (const auto& tok : identifier_tokens(*source)) {
      if (tok.find("ad") != std::string::npos && !cfg.whitelist.count(tok)) return true;
    }
  }
  return false;
}

bool type_feature(const ViewNode& view, const AdFeatureConfig& cfg) {
  const auto last = final_segment(view.class_name);
  if (last.empty()) return false;
  return std::find(cfg.ad_type_classes.begin(), cfg.ad_type_classes.end(), last) !=
         cfg.ad_type_classes.end();
}

bool custom_class_feature(const ViewNode& view, const AdFeatureConfig& cfg) {
  if (!cfg.custom_class_candidates) return false;
  const std::string_view cls = view.class_name;
  if (cls.find('.') == std::string_view::npos) return false;
  return std::none_of(kFrameworkPrefixes.begin(), kFrameworkPrefixes.end(),
                      [&](std::string_view p) { return cls.starts_with(p); });
}

double area_ratio(const Bounds& b, const Screen& screen) {
  const auto s = screen.area();
  if (s <= 0) return 0.0;
  return static_cast<double>(clamp_to(b, screen).area()) / static_cast<double>(s);
}

std::optional<AdKind> placement_feature(const ViewNode& view, const Screen& screen,
                                        const AdFeatureConfig& cfg) {
  const Bounds b = clamp_to(view.bounds, screen);
  if (b.area() <= 0) return std::nullopt;
  const double ratio = area_ratio(b, screen);

  if (cfg.full_ratio.contains(ratio)) return AdKind::full_screen;

  const double center_x = (b.left + b.right) / 2.0;
  if (cfg.interstitial_ratio.contains(ratio) &&
      std::abs(center_x - screen.width / 2.0) <= cfg.center_tolerance * screen.width) {
    return AdKind::interstitial;
  }

  const double band = cfg.edge_band * screen.height;
  if (cfg.banner_ratio.contains(ratio) &&
      (b.top <= band || screen.height - b.bottom <= band)) {
    return AdKind::banner;
  }
  return std::nullopt;
}

bool has_ad_load_trace(const UIState& state, const AdFeatureConfig& cfg) {
  for (const auto& trace : state.ad_load_traces) {
    for (const auto& sig : cfg.ad_load_signatures) {
      if (!sig.empty() && trace.starts_with(sig)) return true;
    }
  }
  return false;
}

std::vector<DetectedAd> detect_ad_views(const UIState& state, const Screen& screen,
                                        const AdFeatureConfig& cfg, bool inherited_marker) {
  std::vector<DetectedAd> out;
  if (!inherited_marker && !has_ad_load_trace(state, cfg)) return out;
  for (const auto& leaf : leaf_views(state)) {
    const bool candidate = string_feature(leaf, cfg) || type_feature(leaf, cfg) ||
                           custom_class_feature(leaf, cfg);
    if (!candidate) continue;
    if (const auto kind = placement_feature(leaf, screen, cfg)) {
      out.push_back({leaf.id, *kind, leaf.bounds, leaf.z});
    }
  }
  return out;
}

bool StateAds::is_ad(std::string_view view_id) const { return find(view_id) != nullptr; }

const DetectedAd* StateAds::find(std::string_view view_id) const {
  for (const auto& a : ads) {
    if (a.view_id == view_id) return &a;
  }
  return nullptr;
}

std::vector<StateAds> detect_graph_ads(const UTGraph& graph, const AdFeatureConfig& cfg) {
  std::vector<StateAds> result(graph.states.size());
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    result[i].ads = detect_ad_views(graph.states[i], graph.screen, cfg);
  }
  if (!cfg.honor_inherited_markers) return result;

  // Scroll and drag do not reload views: a state that still shows one of its
  // predecessor's ad views inherits the marker. Iterate to a fixpoint so
  // chains of scrolls propagate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : graph.transitions) {
      if (t.event.type != EventType::scroll && t.event.type != EventType::drag) continue;
      const int s = graph.state_index(t.source);
      const int d = graph.state_index(t.target);
      if (s < 0 || d < 0 || s == d) continue;
      auto& dst = result[static_cast<std::size_t>(d)];
      const auto& src = result[static_cast<std::size_t>(s)];
      const UIState& target = graph.states[static_cast<std::size_t>(d)];
      if (dst.inherited || src.ads.empty() || has_ad_load_trace(target, cfg)) continue;
      const bool shares = std::any_of(src.ads.begin(), src.ads.end(), [&](const DetectedAd& a) {
        const ViewNode* n = target.view_tree.find(a.view_id);
        return n && n->is_leaf();
      });
      if (!shares) continue;
      dst.inherited = true;
      dst.ads = detect_ad_views(target, graph.screen, cfg, true);
      changed = true;
    }
  }
  return result;
}

}  // namespace adfraud
