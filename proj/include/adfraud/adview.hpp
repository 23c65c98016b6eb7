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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/geometry.hpp"
#include "adfraud/utg.hpp"

namespace adfraud {

enum class AdKind { banner, interstitial, full_screen };

std::string_view to_string(AdKind k);
std::optional<AdKind> parse_ad_kind(std::string_view s);

/// Closed interval of screen-area ratios.
struct RatioInterval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double r) const { return lo <= r && r <= hi; }
  bool operator==(const RatioInterval&) const = default;
};

struct AdNetwork {
  std::string name;
  std::vector<std::string> package_prefixes;
};

/// The 20 ad networks the detector knows out of the box, with the package
/// prefixes of their SDKs. Used both for ad-load trace matching and for the
/// ad-library prefilter.
const std::vector<AdNetwork>& known_ad_networks();

/// Lowercase English words containing "ad" that must not count as ad hints
/// ("load", "shadow", "header", ...).
const std::vector<std::string>& default_whitelist();

struct AdFeatureConfig {
  std::set<std::string> whitelist;
  std::vector<std::string> ad_type_classes;
  std::vector<std::string> ad_load_signatures;
  // Detection intervals: decide the kind of a candidate. Compliance intervals
  // used by the size rule live in RuleConfig.
  RatioInterval banner_ratio{0.0005, 0.09};
  RatioInterval interstitial_ratio{0.2, 0.8};
  RatioInterval full_ratio{0.9, 1.0};
  /// Max distance of an interstitial's horizontal center from the screen
  /// center, as a fraction of screen width.
  double center_tolerance = 0.05;
  /// Height of the top and bottom banner bands, as a fraction of screen height.
  double edge_band = 0.10;
  /// Treat views of non-framework classes as candidates.
  bool custom_class_candidates = true;
  /// Open the trace gate for states that inherited ad views over scroll/drag.
  bool honor_inherited_markers = false;

  static AdFeatureConfig defaults();

  /// Throws std::invalid_argument listing every broken invariant.
  void validate() const;

  bool operator==(const AdFeatureConfig&) const = default;
};

/// Overrides defaults with the fields present in a JSON config document.
AdFeatureConfig parse_ad_config(std::string_view json_text);
std::string ad_config_to_json(const AdFeatureConfig& cfg);

/// Lowercase identifier tokens: splits on non-letters and on camel-case
/// boundaries ("fullscreenAdView" -> fullscreen, ad, view).
std::vector<std::string> identifier_tokens(std::string_view identifier);

bool string_feature(const ViewNode& view, const AdFeatureConfig& cfg);
bool type_feature(const ViewNode& view, const AdFeatureConfig& cfg);
bool custom_class_feature(const ViewNode& view, const AdFeatureConfig& cfg);

double area_ratio(const Bounds& b, const Screen& screen);

/// Kind implied by size and position; precedence full_screen > interstitial >
/// banner. Bounds are clamped to the screen first; zero-area views get none.
std::optional<AdKind> placement_feature(const ViewNode& view, const Screen& screen,
                                        const AdFeatureConfig& cfg);

bool has_ad_load_trace(const UIState& state, const AdFeatureConfig& cfg);

struct DetectedAd {
  std::string view_id;
  AdKind kind = AdKind::banner;
  Bounds bounds;
  int z = 0;

  bool operator==(const DetectedAd&) const = default;
};

/// Ad views among the state's leaves, topmost first. Empty unless the state
/// ran an ad-load method or `inherited_marker` is set.
std::vector<DetectedAd> detect_ad_views(const UIState& state, const Screen& screen,
                                        const AdFeatureConfig& cfg,
                                        bool inherited_marker = false);

struct StateAds {
  std::vector<DetectedAd> ads;
  bool inherited = false;

  bool is_ad(std::string_view view_id) const;
  const DetectedAd* find(std::string_view view_id) const;
};

/// Per-state detection over a whole graph, parallel to graph.states. When
/// cfg.honor_inherited_markers is set, states reached over scroll/drag that
/// still show an ad view of their predecessor are detected with the gate open.
std::vector<StateAds> detect_graph_ads(const UTGraph& graph, const AdFeatureConfig& cfg);

}  // namespace adfraud
