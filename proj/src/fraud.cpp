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

#include "adfraud/fraud.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "adfraud/traffic.hpp"
#include "json_support.hpp"

namespace adfraud {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

bool is_large(AdKind k) { return k == AdKind::interstitial || k == AdKind::full_screen; }

// Non-ad leaves in tree order.
std::vector<const ViewNode*> content_leaves(const UIState& state,
                                            std::span<const DetectedAd> ads) {
  std::vector<const ViewNode*> out;
  for (const auto& n : state.view_tree.nodes) {
    if (!n.is_leaf()) continue;
    const bool ad = std::any_of(ads.begin(), ads.end(),
                                [&](const DetectedAd& a) { return a.view_id == n.id; });
    if (!ad) out.push_back(&n);
  }
  return out;
}

RatioInterval read_interval(const json::Field& f) {
  const auto v = f.items();
  if (v.size() != 2) f.fail("interval must be [lo, hi]");
  return {v[0].number(), v[1].number()};
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool is_non_content_kind(StateKind k) {
  return k == StateKind::launch || k == StateKind::login || k == StateKind::exit ||
         k == StateKind::error || k == StateKind::thankyou;
}

}  // namespace

const RatioInterval& RuleConfig::size_interval(AdKind k) const {
  switch (k) {
    case AdKind::banner: return size_banner;
    case AdKind::interstitial: return size_interstitial;
    case AdKind::full_screen: return size_full;
  }
  return size_banner;
}

void RuleConfig::validate() const {
  std::vector<std::string> problems;
  for (const auto& [name, iv] : {std::pair{"size_banner", &size_banner},
                                 std::pair{"size_interstitial", &size_interstitial},
                                 std::pair{"size_full", &size_full}}) {
    if (!(0.0 <= iv->lo && iv->lo <= iv->hi && iv->hi <= 1.0)) {
      problems.push_back(std::string(name) + " must satisfy 0 <= lo <= hi <= 1");
    }
  }
  if (!(number_area_cap > 0.0 && number_area_cap <= 1.0)) {
    problems.push_back("number_area_cap must be in (0, 1]");
  }
  if (frequent_threshold < 1) problems.push_back("frequent_threshold must be >= 1");
  if (!problems.empty()) {
    std::string msg = "invalid rule config:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
}

RuleConfig parse_rule_config(std::string_view json_text) {
  const auto doc = json::parse_document(json_text);
  const json::Field root(doc, "");
  root.expect_object({}, {"size_banner", "size_interstitial", "size_full", "number_area_cap",
                          "frequent_threshold", "download_content_types", "disabled"});
  RuleConfig cfg;
  if (auto f = root.opt("size_banner")) cfg.size_banner = read_interval(*f);
  if (auto f = root.opt("size_interstitial")) cfg.size_interstitial = read_interval(*f);
  if (auto f = root.opt("size_full")) cfg.size_full = read_interval(*f);
  if (auto f = root.opt("number_area_cap")) cfg.number_area_cap = f->number();
  if (auto f = root.opt("frequent_threshold")) cfg.frequent_threshold = f->int32();
  if (auto f = root.opt("download_content_types")) cfg.download_content_types = f->strings();
  if (auto f = root.opt("disabled")) {
    for (const auto& item : f->items()) {
      cfg.disabled.insert(parse_enum<FraudType>(item, parse_fraud_type, "fraud type"));
    }
  }
  cfg.validate();
  return cfg;
}

std::string rule_config_to_json(const RuleConfig& cfg) {
  json::OJson j;
  j["size_banner"] = {cfg.size_banner.lo, cfg.size_banner.hi};
  j["size_interstitial"] = {cfg.size_interstitial.lo, cfg.size_interstitial.hi};
  j["size_full"] = {cfg.size_full.lo, cfg.size_full.hi};
  j["number_area_cap"] = cfg.number_area_cap;
  j["frequent_threshold"] = cfg.frequent_threshold;
  j["download_content_types"] = cfg.download_content_types;
  j["disabled"] = json::OJson::array();
  for (auto t : cfg.disabled) j["disabled"].push_back(std::string(to_string(t)));
  return json::dump(j);
}

std::string config_hash(const AdFeatureConfig& ad_cfg, const RuleConfig& rule_cfg) {
  const auto h = fnv1a(rule_config_to_json(rule_cfg), fnv1a(ad_config_to_json(ad_cfg)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<FraudFinding> check_hidden(const UIState& state, std::span<const DetectedAd> ads) {
  std::vector<FraudFinding> out;
  const auto leaves = content_leaves(state, ads);
  for (const auto& ad : ads) {
    std::vector<std::string> covering;
    std::vector<Bounds> parts;
    for (const auto* w : leaves) {
      if (w->z > ad.z && intersects(w->bounds, ad.bounds)) {
        covering.push_back(w->id);
        parts.push_back(intersection(w->bounds, ad.bounds));
      }
    }
    if (covering.empty()) continue;
    FraudFinding f;
    f.type = FraudType::hidden;
    f.state_ids = {state.id};
    f.view_ids = {ad.view_id};
    f.view_ids.insert(f.view_ids.end(), covering.begin(), covering.end());
    f.evidence.numbers = {{"ad_area", static_cast<double>(ad.bounds.area())},
                          {"covered_area", static_cast<double>(union_area(parts))},
                          {"covering_views", static_cast<double>(covering.size())}};
    f.evidence.text = "ad view " + ad.view_id + " is covered by " + join(covering) +
                      " drawn above it";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FraudFinding> check_size(const UIState& state, std::span<const DetectedAd> ads,
                                     const Screen& screen, const RuleConfig& cfg) {
  std::vector<FraudFinding> out;
  for (const auto& ad : ads) {
    const double r = area_ratio(ad.bounds, screen);
    const auto& iv = cfg.size_interval(ad.kind);
    if (iv.contains(r)) continue;
    FraudFinding f;
    f.type = FraudType::size;
    f.state_ids = {state.id};
    f.view_ids = {ad.view_id};
    f.evidence.numbers = {{"ratio", r}, {"lower", iv.lo}, {"upper", iv.hi}};
    f.evidence.text = std::string(to_string(ad.kind)) + " ad " + ad.view_id +
                      " covers " + num(r) + " of the screen, allowed [" + num(iv.lo) + ", " +
                      num(iv.hi) + "]";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FraudFinding> check_number(const UIState& state, std::span<const DetectedAd> ads,
                                       const Screen& screen, const RuleConfig& cfg) {
  if (ads.empty() || content_leaves(state, ads).empty()) return {};
  std::vector<Bounds> rects;
  for (const auto& ad : ads) rects.push_back(clamp_to(ad.bounds, screen));
  const double total = static_cast<double>(union_area(rects)) /
                       static_cast<double>(std::max<std::int64_t>(screen.area(), 1));
  if (!(total > cfg.number_area_cap)) return {};
  FraudFinding f;
  f.type = FraudType::number;
  f.state_ids = {state.id};
  for (const auto& ad : ads) f.view_ids.push_back(ad.view_id);
  std::sort(f.view_ids.begin(), f.view_ids.end());
  f.evidence.numbers = {{"total_ratio", total},
                        {"ad_count", static_cast<double>(ads.size())},
                        {"cap", cfg.number_area_cap}};
  f.evidence.text = std::to_string(ads.size()) + " ad view(s) cover " + num(total) +
                    " of the screen next to app content, cap " + num(cfg.number_area_cap);
  return {std::move(f)};
}

std::vector<FraudFinding> check_overlap(const UIState& state, std::span<const DetectedAd> ads) {
  std::vector<FraudFinding> out;
  const auto leaves = content_leaves(state, ads);
  for (const auto& ad : ads) {
    std::vector<std::string> under;
    std::vector<Bounds> parts;
    for (const auto* w : leaves) {
      if (w->clickable && ad.z >= w->z && intersects(w->bounds, ad.bounds)) {
        under.push_back(w->id);
        parts.push_back(intersection(w->bounds, ad.bounds));
      }
    }
    if (under.empty()) continue;
    FraudFinding f;
    f.type = FraudType::overlap;
    f.state_ids = {state.id};
    f.view_ids = {ad.view_id};
    f.view_ids.insert(f.view_ids.end(), under.begin(), under.end());
    f.evidence.numbers = {{"overlapped_views", static_cast<double>(under.size())},
                          {"overlap_area", static_cast<double>(union_area(parts))}};
    f.evidence.text = "ad view " + ad.view_id + " is drawn over clickable " + join(under);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_interactive_view(const ViewTree& tree, const ViewNode& view) {
  if (!view.clickable || !view.is_leaf()) return false;
  const auto pos = view.class_name.find_last_of(".$");
  const auto last = pos == std::string::npos ? view.class_name : view.class_name.substr(pos + 1);
  if (lower(last).find("button") != std::string::npos) return true;
  if (lower(view.class_name).find("dialog") != std::string::npos) return true;
  auto parent = tree.parent_of(view.id);
  for (int guard = 0; parent && guard < static_cast<int>(tree.nodes.size()); ++guard) {
    const ViewNode* p = tree.find(*parent);
    if (!p) break;
    if (lower(p->class_name).find("dialog") != std::string::npos) return true;
    parent = tree.parent_of(p->id);
  }
  return false;
}

std::vector<FraudFinding> check_interaction(const UTGraph& graph, std::span<const StateAds> ads) {
  // (s1, s2, ad) -> interactive views of s1 under the ad.
  std::map<std::tuple<int, int, std::string>, std::set<std::string>> hits;
  for (const auto& t : graph.transitions) {
    if (t.event.type == EventType::app_start || t.source == t.target) continue;
    const int s = graph.state_index(t.source);
    const int d = graph.state_index(t.target);
    if (s < 0 || d < 0) continue;
    const UIState& s1 = graph.states[static_cast<std::size_t>(s)];
    const auto& prev_ads = ads[static_cast<std::size_t>(s)];
    for (const auto& ad : ads[static_cast<std::size_t>(d)].ads) {
      if (!is_large(ad.kind)) continue;
      for (const auto& w : s1.view_tree.nodes) {
        if (prev_ads.is_ad(w.id) || !is_interactive_view(s1.view_tree, w)) continue;
        if (intersects(w.bounds, ad.bounds)) hits[{s, d, ad.view_id}].insert(w.id);
      }
    }
  }
  std::vector<FraudFinding> out;
  for (const auto& [key, views] : hits) {
    const auto& [s, d, ad_id] = key;
    const UIState& s1 = graph.states[static_cast<std::size_t>(s)];
    const UIState& s2 = graph.states[static_cast<std::size_t>(d)];
    const DetectedAd* ad = ads[static_cast<std::size_t>(d)].find(ad_id);
    std::vector<Bounds> parts;
    for (const auto& v : views) parts.push_back(intersection(s1.view_tree.find(v)->bounds, ad->bounds));
    FraudFinding f;
    f.type = FraudType::interaction;
    f.state_ids = {s1.id, s2.id};
    f.view_ids = {ad_id};
    f.view_ids.insert(f.view_ids.end(), views.begin(), views.end());
    f.evidence.numbers = {{"interactive_views", static_cast<double>(views.size())},
                          {"intersection_area", static_cast<double>(union_area(parts))}};
    f.evidence.text = std::string(to_string(ad->kind)) + " ad " + ad_id + " in " + s2.id +
                      " appears over " + join({views.begin(), views.end()}) + " of " + s1.id;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

bool is_download(const TrafficRecord& rec, const RuleConfig& cfg) {
  if (rec.user_initiated) return false;
  bool zip = false;
  try {
    const auto bytes = decode_magic(rec.body_magic);
    zip = bytes.size() >= 4 && bytes[0] == 0x50 && bytes[1] == 0x4B && bytes[2] == 0x03 &&
          bytes[3] == 0x04;
  } catch (const std::invalid_argument&) {
    zip = false;
  }
  if (zip) return true;
  const auto ct = lower(rec.response_content_type);
  return std::any_of(cfg.download_content_types.begin(), cfg.download_content_types.end(),
                     [&](const std::string& c) { return lower(c) == ct; });
}

}  // namespace

std::vector<FraudFinding> check_drive_by(const UTGraph& graph, std::span<const StateAds> ads,
                                         const RuleConfig& cfg) {
  std::vector<FraudFinding> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& t : graph.transitions) {
    if (!is_touch(t.event.type)) continue;
    const int s = graph.state_index(t.source);
    const int d = graph.state_index(t.target);
    if (s < 0 || d < 0 || seen.count({s, d})) continue;
    const UIState& src = graph.states[static_cast<std::size_t>(s)];
    const UIState& dst = graph.states[static_cast<std::size_t>(d)];
    const auto& src_ads = ads[static_cast<std::size_t>(s)].ads;
    if (src_ads.empty() || src.activity != dst.activity) continue;

    const TrafficRecord* hit = nullptr;
    for (const auto& rec : graph.traffic) {
      const bool bound_to_event =
          rec.state_id == src.id && rec.view_id && t.event.view_id && *rec.view_id == *t.event.view_id;
      const bool in_target = rec.state_id == dst.id;
      if ((bound_to_event || in_target) && is_download(rec, cfg)) {
        hit = &rec;
        break;
      }
    }
    if (!hit) continue;
    seen.insert({s, d});
    FraudFinding f;
    f.type = FraudType::drive_by;
    f.state_ids = {src.id};
    if (dst.id != src.id) f.state_ids.push_back(dst.id);
    for (const auto& a : src_ads) f.view_ids.push_back(a.view_id);
    std::sort(f.view_ids.begin(), f.view_ids.end());
    f.evidence.numbers = {{"response_length", static_cast<double>(hit->response_length)}};
    f.evidence.text = std::string(to_string(t.event.type)) + " in " + src.id +
                      " started unconfirmed download " + hit->id + " (" +
                      hit->response_content_type + ") without leaving " + src.activity;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FraudFinding> check_outside(const UTGraph& graph, std::span<const StateAds> ads) {
  std::vector<FraudFinding> out;
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    const auto& st = graph.states[i];
    if (ads[i].ads.empty() || graph.app.declares_activity(st.activity)) continue;
    FraudFinding f;
    f.type = FraudType::outside;
    f.state_ids = {st.id};
    for (const auto& a : ads[i].ads) f.view_ids.push_back(a.view_id);
    std::sort(f.view_ids.begin(), f.view_ids.end());
    f.evidence.numbers = {{"ad_count", static_cast<double>(ads[i].ads.size())}};
    f.evidence.text = "ads shown in " + st.activity + ", which " + graph.app.package +
                      " does not declare";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FraudFinding> check_frequent(const UTGraph& graph, std::span<const StateAds> ads,
                                         const RuleConfig& cfg) {
  std::vector<std::set<std::tuple<std::string, int, std::string>>> edges(graph.states.size());
  for (const auto& t : graph.transitions) {
    if (t.source == t.target) continue;
    const int d = graph.state_index(t.target);
    if (d < 0) continue;
    if (t.event.type == EventType::app_start) {
      edges[static_cast<std::size_t>(d)].insert({"", static_cast<int>(EventType::app_start), ""});
    } else {
      edges[static_cast<std::size_t>(d)].insert(
          {t.source, static_cast<int>(t.event.type), t.event.view_id.value_or("")});
    }
  }
  std::vector<FraudFinding> out;
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    std::vector<std::string> large;
    for (const auto& a : ads[i].ads) {
      if (is_large(a.kind)) large.push_back(a.view_id);
    }
    const auto count = static_cast<int>(edges[i].size());
    if (large.empty() || count <= cfg.frequent_threshold) continue;
    std::sort(large.begin(), large.end());
    FraudFinding f;
    f.type = FraudType::frequent;
    f.state_ids = {graph.states[i].id};
    f.view_ids = large;
    f.evidence.numbers = {{"distinct_edges", static_cast<double>(count)},
                          {"threshold", static_cast<double>(cfg.frequent_threshold)}};
    f.evidence.text = "ad state " + graph.states[i].id + " is reached over " +
                      std::to_string(count) + " distinct transitions, threshold " +
                      std::to_string(cfg.frequent_threshold);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FraudFinding> check_non_content(const UTGraph& graph, std::span<const StateAds> ads) {
  std::vector<std::set<int>> neighbors(graph.states.size());
  for (const auto& t : graph.transitions) {
    if (t.event.type == EventType::app_start || t.source == t.target) continue;
    const int s = graph.state_index(t.source);
    const int d = graph.state_index(t.target);
    if (s < 0 || d < 0) continue;
    neighbors[static_cast<std::size_t>(s)].insert(d);
    neighbors[static_cast<std::size_t>(d)].insert(s);
  }
  std::vector<FraudFinding> out;
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    const auto& st = graph.states[i];
    const bool own = is_non_content_kind(st.kind);
    std::vector<std::string> near;
    if (!own && content_leaves(st, ads[i].ads).empty()) {
      for (int n : neighbors[i]) {
        const auto& ns = graph.states[static_cast<std::size_t>(n)];
        if (is_non_content_kind(ns.kind)) near.push_back(ns.id);
      }
      std::sort(near.begin(), near.end());
    }
    if (!own && near.empty()) continue;
    for (const auto& a : ads[i].ads) {
      if (!is_large(a.kind)) continue;
      FraudFinding f;
      f.type = FraudType::non_content;
      f.state_ids = {st.id};
      f.state_ids.insert(f.state_ids.end(), near.begin(), near.end());
      f.view_ids = {a.view_id};
      f.evidence.numbers = {{"adjacent", own ? 0.0 : 1.0}};
      f.evidence.text = own ? std::string(to_string(a.kind)) + " ad " + a.view_id + " on " +
                                  std::string(to_string(st.kind)) + " state " + st.id
                            : "ad-only state " + st.id + " next to non-content state(s) " +
                                  join(near);
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::optional<StateKind> kind_from_activity_name(std::string_view activity) {
  const auto pos = activity.find_last_of('.');
  const auto name = lower(pos == std::string_view::npos ? activity : activity.substr(pos + 1));
  if (name.find("splash") != std::string::npos) return StateKind::launch;
  if (name.find("login") != std::string::npos || name.find("signin") != std::string::npos) {
    return StateKind::login;
  }
  for (const char* k : {"exit", "finish", "quit"}) {
    if (name.find(k) != std::string::npos) return StateKind::exit;
  }
  return std::nullopt;
}

UTGraph with_inferred_kinds(UTGraph graph) {
  for (auto& st : graph.states) {
    if (st.kind != StateKind::content) continue;
    if (auto k = kind_from_activity_name(st.activity)) st.kind = *k;
  }
  return graph;
}

void sort_findings(std::vector<FraudFinding>& findings) {
  std::sort(findings.begin(), findings.end(), [](const FraudFinding& a, const FraudFinding& b) {
    return std::tie(a.type, a.state_ids, a.view_ids) < std::tie(b.type, b.state_ids, b.view_ids);
  });
}

FraudReport check_all(const UTGraph& graph, const AdFeatureConfig& ad_cfg,
                      const RuleConfig& rule_cfg) {
  if (auto v = validate(graph); !v.empty()) throw InvalidGraph(std::move(v));
  const auto ads = detect_graph_ads(graph, ad_cfg);

  std::vector<FraudFinding> all;
  auto add = [&](FraudType t, std::vector<FraudFinding> found) {
    if (!rule_cfg.enabled(t)) return;
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  };
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    const auto& st = graph.states[i];
    const std::span<const DetectedAd> a = ads[i].ads;
    if (a.empty()) continue;
    if (rule_cfg.enabled(FraudType::hidden)) add(FraudType::hidden, check_hidden(st, a));
    if (rule_cfg.enabled(FraudType::size)) add(FraudType::size, check_size(st, a, graph.screen, rule_cfg));
    if (rule_cfg.enabled(FraudType::number)) {
      add(FraudType::number, check_number(st, a, graph.screen, rule_cfg));
    }
    if (rule_cfg.enabled(FraudType::overlap)) add(FraudType::overlap, check_overlap(st, a));
  }
  if (rule_cfg.enabled(FraudType::interaction)) {
    add(FraudType::interaction, check_interaction(graph, ads));
  }
  if (rule_cfg.enabled(FraudType::drive_by)) {
    add(FraudType::drive_by, check_drive_by(graph, ads, rule_cfg));
  }
  if (rule_cfg.enabled(FraudType::outside)) add(FraudType::outside, check_outside(graph, ads));
  if (rule_cfg.enabled(FraudType::frequent)) {
    add(FraudType::frequent, check_frequent(graph, ads, rule_cfg));
  }
  if (rule_cfg.enabled(FraudType::non_content)) {
    add(FraudType::non_content, check_non_content(graph, ads));
  }

  FraudReport report;
  report.package = graph.app.package;
  report.config_hash = config_hash(ad_cfg, rule_cfg);
  for (auto& f : all) f.rule_config_hash = report.config_hash;
  sort_findings(all);
  report.findings = std::move(all);
  report.fraudulent = !report.findings.empty();
  return report;
}

}  // namespace adfraud
