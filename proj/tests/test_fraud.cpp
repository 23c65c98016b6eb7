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

#include <gtest/gtest.h>

#include <array>

#include "adfraud/errors.hpp"
#include "adfraud/fraud.hpp"
#include "adfraud/json_error.hpp"
#include "support.hpp"

using namespace adfraud;
using namespace testing_support;

namespace {

const Screen kScreen{1080, 1776};
const std::string kGms = "com.google.android.gms.ads.AdView";

DetectedAd ad(std::string id, AdKind kind, Bounds b, int z) { return {std::move(id), kind, b, z}; }

std::size_t count(const FraudReport& r, FraudType t) {
  return static_cast<std::size_t>(std::count_if(r.findings.begin(), r.findings.end(),
                                                [&](const FraudFinding& f) { return f.type == t; }));
}

ViewNode interstitial_node(std::string id = "ad_inter", int z = 50) {
  return node(std::move(id), kGms, {135, 520, 945, 1330}, z, true);
}

}  // namespace

// ---- hidden ---------------------------------------------------------------

TEST(Hidden, ButtonAboveAd) {
  const auto s = flat_state("s", {node("ad", kGms, {0, 0, 200, 100}, 1),
                                  node("btn", "android.widget.Button", {50, 0, 250, 100}, 2, true)});
  const DetectedAd a[] = {ad("ad", AdKind::banner, {0, 0, 200, 100}, 1)};
  const auto f = check_hidden(s, a);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].view_ids, (std::vector<std::string>{"ad", "btn"}));
  EXPECT_EQ(f[0].evidence.numbers.at("covered_area"), 15000);
  EXPECT_TRUE(check_overlap(s, a).empty());
}

TEST(Hidden, TopmostAdIsNotHidden) {
  const auto s = flat_state("s", {node("ad", kGms, {0, 0, 200, 100}, 3),
                                  node("btn", "android.widget.Button", {50, 0, 250, 100}, 2, true)});
  const DetectedAd a[] = {ad("ad", AdKind::banner, {0, 0, 200, 100}, 3)};
  EXPECT_TRUE(check_hidden(s, a).empty());
  EXPECT_EQ(check_overlap(s, a).size(), 1u);
}

TEST(Hidden, AdFullyBehindEmailButton) {
  const Bounds b{0, 1676, 1080, 1776};
  const auto s = flat_state("s", {node("ad_banner", kGms, b, 1),
                                  node("btn_email", "android.widget.Button", {0, 1650, 1080, 1776}, 4, true)});
  const DetectedAd a[] = {ad("ad_banner", AdKind::banner, b, 1)};
  const auto f = check_hidden(s, a);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].evidence.numbers.at("covered_area"), b.area());
}

// ---- size -----------------------------------------------------------------

TEST(Size, Examples) {
  const auto s = flat_state("s", {});
  const RuleConfig cfg;
  const DetectedAd ok[] = {ad("a", AdKind::interstitial, {135, 520, 945, 1330}, 1)};
  EXPECT_TRUE(check_size(s, ok, kScreen, cfg).empty());

  const DetectedAd tiny[] = {ad("a", AdKind::interstitial, {490, 838, 590, 938}, 1)};
  const auto f = check_size(s, tiny, kScreen, cfg);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_NEAR(f[0].evidence.numbers.at("ratio"), 10000.0 / 1918080.0, 1e-12);

  const DetectedAd full[] = {ad("a", AdKind::full_screen, {0, 0, 1080, 1776}, 1)};
  EXPECT_TRUE(check_size(s, full, kScreen, cfg).empty());
}

TEST(Size, PaperBannerIntervalIsConfigurable) {
  const auto s = flat_state("s", {});
  // 320x50 banner, ratio ~0.0083.
  const DetectedAd b[] = {ad("a", AdKind::banner, {380, 1726, 700, 1776}, 1)};
  RuleConfig cfg;
  EXPECT_TRUE(check_size(s, b, kScreen, cfg).empty());
  cfg.size_banner = {0.004, 0.005};
  EXPECT_EQ(check_size(s, b, kScreen, cfg).size(), 1u);
}

// ---- number ---------------------------------------------------------------

TEST(Number, SixtyPercentWithContent) {
  // Three full-width ads stacked over 60% of the height, one overlapping another.
  const auto s = flat_state("s", {node("txt", "android.widget.TextView", {0, 1500, 1080, 1600}, 1),
                                  node("a1", kGms, {0, 0, 1080, 400}, 2),
                                  node("a2", kGms, {0, 300, 1080, 800}, 3),
                                  node("a3", kGms, {0, 800, 1080, 1065}, 4)});
  const DetectedAd a[] = {ad("a1", AdKind::banner, {0, 0, 1080, 400}, 2),
                          ad("a2", AdKind::banner, {0, 300, 1080, 800}, 3),
                          ad("a3", AdKind::banner, {0, 800, 1080, 1065}, 4)};
  const auto f = check_number(s, a, kScreen, RuleConfig{});
  ASSERT_EQ(f.size(), 1u);
  const std::vector<Bounds> rects = {a[0].bounds, a[1].bounds, a[2].bounds};
  EXPECT_DOUBLE_EQ(f[0].evidence.numbers.at("total_ratio"),
                   double(raster_union(rects, 1800)) / (1080.0 * 1776.0));
  EXPECT_EQ(f[0].evidence.numbers.at("ad_count"), 3);
}

TEST(Number, SingleBannerAndEmpty) {
  const auto s = flat_state("s", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1)});
  const DetectedAd b[] = {ad("a", AdKind::banner, {380, 1726, 700, 1776}, 2)};
  EXPECT_TRUE(check_number(s, b, kScreen, RuleConfig{}).empty());
  EXPECT_TRUE(check_number(s, {}, kScreen, RuleConfig{}).empty());
}

TEST(Number, AdOnlyStateIsNotNumberFraud) {
  const auto s = flat_state("s", {node("a", kGms, {0, 0, 1080, 1776}, 1)});
  const DetectedAd a[] = {ad("a", AdKind::full_screen, {0, 0, 1080, 1776}, 1)};
  EXPECT_TRUE(check_number(s, a, kScreen, RuleConfig{}).empty());
}

// ---- overlap --------------------------------------------------------------

TEST(Overlap, AdOverFourButtons) {
  std::vector<ViewNode> leaves;
  for (int j = 0; j < 4; ++j) {
    leaves.push_back(node("b" + std::to_string(j), "android.widget.Button",
                          {40 + 210 * j, 1390, 220 + 210 * j, 1530}, j + 1, true));
  }
  leaves.push_back(node("ad", kGms, {0, 1300, 1080, 1600}, 10));
  const auto s = flat_state("s", leaves);
  const DetectedAd a[] = {ad("ad", AdKind::banner, {0, 1300, 1080, 1600}, 10)};
  const auto f = check_overlap(s, a);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].view_ids.size(), 5u);
  EXPECT_EQ(f[0].evidence.numbers.at("overlapped_views"), 4);
}

TEST(Overlap, DisjointButton) {
  const auto s = flat_state("s", {node("ad", kGms, {0, 0, 200, 100}, 2),
                                  node("btn", "android.widget.Button", {200, 0, 300, 100}, 1, true)});
  const DetectedAd a[] = {ad("ad", AdKind::banner, {0, 0, 200, 100}, 2)};
  EXPECT_TRUE(check_overlap(s, a).empty());
  EXPECT_TRUE(check_hidden(s, a).empty());
}

// Hidden and overlap agree with an all-pairs scan; a pair never lands in both.
TEST(PlacementOracle, HiddenAndOverlapPairScan) {
  Rng rng(21);
  for (int i = 0; i < 1500; ++i) {
    UIState s;
    s.id = "s";
    s.view_tree = random_tree(rng, kScreen, 11);
    std::vector<DetectedAd> ads;
    std::set<std::string> ids;
    for (const auto& n : s.view_tree.nodes) {
      if (n.is_leaf() && rng.chance(0.3)) {
        ads.push_back(ad(n.id, AdKind::banner, n.bounds, n.z));
        ids.insert(n.id);
      }
    }
    const auto hidden = finding_pairs(check_hidden(s, ads));
    const auto overlap = finding_pairs(check_overlap(s, ads));
    ASSERT_EQ(hidden, pair_scan(s, ids, true)) << i;
    ASSERT_EQ(overlap, pair_scan(s, ids, false)) << i;
    for (const auto& p : hidden) ASSERT_FALSE(overlap.count(p)) << i;
  }
}

// Adding a new ad view to a state never lowers any single-state rule's count.
TEST(PlacementProperty, AddingAnAdNeverLowersCounts) {
  Rng rng(8);
  const RuleConfig cfg;
  for (int i = 0; i < 500; ++i) {
    UIState s;
    s.id = "s";
    s.view_tree = random_tree(rng, kScreen, 12);
    std::vector<DetectedAd> ads;
    for (const auto& n : s.view_tree.nodes) {
      if (n.is_leaf() && rng.chance(0.25)) ads.push_back(ad(n.id, AdKind::interstitial, n.bounds, n.z));
    }
    auto counts = [&](const std::vector<DetectedAd>& a) {
      return std::array<std::size_t, 4>{check_hidden(s, a).size(), check_size(s, a, kScreen, cfg).size(),
                                        check_number(s, a, kScreen, cfg).size(), check_overlap(s, a).size()};
    };
    const auto before = counts(ads);
    const int z = rng.chance(0.5) ? 100 : -1;
    auto extra = node("added", kGms, random_ad_shape(rng, kScreen), z);
    s.view_tree.nodes[0].children.push_back(extra.id);
    s.view_tree.nodes.push_back(extra);
    ads.push_back(ad(extra.id, rng.chance(0.5) ? AdKind::banner : AdKind::interstitial, extra.bounds, z));
    const auto after = counts(ads);
    for (std::size_t k = 0; k < 4; ++k) ASSERT_LE(before[k], after[k]) << i << " rule " << k;
  }
}

// ---- interaction ----------------------------------------------------------

namespace {

UTGraph exit_dialog_graph(Bounds ad_bounds) {
  UTGraph g;
  g.app = meta();
  UIState dialog = flat_state("dialog", {}, {}, "com.example.MainActivity", StateKind::exit);
  ViewNode panel = node("panel", "android.widget.LinearLayout", {90, 1080, 990, 1580}, 1);
  panel.resource_id = "dialog_panel";
  panel.class_name = "com.android.internal.app.AlertDialogLayout";
  panel.children = {"btn_cancel", "btn_exit"};
  dialog.view_tree.nodes[0].children = {"panel"};
  dialog.view_tree.nodes.push_back(panel);
  dialog.view_tree.nodes.push_back(node("btn_cancel", "android.widget.TextView", {90, 1450, 540, 1580}, 2, true));
  dialog.view_tree.nodes.push_back(node("btn_exit", "android.widget.TextView", {540, 1450, 990, 1580}, 3, true));
  g.states.push_back(dialog);
  g.states.push_back(flat_state("ad", {node("ad_inter", kGms, ad_bounds, 1, true)}));
  g.transitions.push_back({"dialog", "ad", {EventType::click, "btn_exit"}});
  return g;
}

}  // namespace

TEST(Interaction, InterstitialOverExitButton) {
  const auto g = exit_dialog_graph({40, 700, 1040, 1500});
  const auto ads = detect_graph_ads(g, AdFeatureConfig::defaults());
  ASSERT_EQ(ads[1].ads.size(), 1u);
  ASSERT_EQ(ads[1].ads[0].kind, AdKind::interstitial);
  const auto f = check_interaction(g, ads);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].state_ids, (std::vector<std::string>{"dialog", "ad"}));
  EXPECT_EQ(f[0].view_ids, (std::vector<std::string>{"ad_inter", "btn_cancel", "btn_exit"}));
}

TEST(Interaction, DisjointAdIsClean) {
  const auto g = exit_dialog_graph({140, 100, 940, 1000});
  const auto ads = detect_graph_ads(g, AdFeatureConfig::defaults());
  ASSERT_EQ(ads[1].ads.size(), 1u);
  EXPECT_TRUE(check_interaction(g, ads).empty());
}

TEST(Interaction, InteractiveViews) {
  ViewTree t;
  t.root = "r";
  t.nodes = {node("r", "android.widget.FrameLayout", {0, 0, 10, 10}, 0),
             node("b", "android.widget.ImageButton", {0, 0, 1, 1}, 1, true),
             node("x", "android.widget.TextView", {0, 0, 1, 1}, 2, true),
             node("n", "android.widget.Button", {0, 0, 1, 1}, 3, false)};
  t.nodes[0].children = {"b", "x", "n"};
  EXPECT_TRUE(is_interactive_view(t, t.nodes[1]));
  EXPECT_FALSE(is_interactive_view(t, t.nodes[2]));
  EXPECT_FALSE(is_interactive_view(t, t.nodes[3]));
}

// Every transition pair checked directly against the rule.
TEST(InteractionOracle, TransitionPairs) {
  const auto cfg = AdFeatureConfig::defaults();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = random_graph(seed, 8, 10);
    const auto ads = detect_graph_ads(g, cfg);
    std::set<std::tuple<std::string, std::string, std::string, std::string>> expect;
    for (const auto& t : g.transitions) {
      if (t.event.type == EventType::app_start || t.source == t.target) continue;
      const auto si = static_cast<std::size_t>(g.state_index(t.source));
      const auto di = static_cast<std::size_t>(g.state_index(t.target));
      for (const auto& a : ads[di].ads) {
        if (a.kind == AdKind::banner) continue;
        for (const auto& w : g.states[si].view_tree.nodes) {
          if (ads[si].is_ad(w.id) || !is_interactive_view(g.states[si].view_tree, w)) continue;
          if (oracle_overlaps(a.bounds, w.bounds)) expect.insert({t.source, t.target, a.view_id, w.id});
        }
      }
    }
    std::set<std::tuple<std::string, std::string, std::string, std::string>> got;
    for (const auto& f : check_interaction(g, ads)) {
      for (std::size_t k = 1; k < f.view_ids.size(); ++k) {
        got.insert({f.state_ids[0], f.state_ids[1], f.view_ids[0], f.view_ids[k]});
      }
    }
    ASSERT_EQ(got, expect) << seed;
  }
}

// ---- drive-by -------------------------------------------------------------


TEST(DriveByOracle, SixteenRowTruthTable) {
  const auto ad_cfg = AdFeatureConfig::defaults();
  for (int row = 0; row < 16; ++row) {
    const bool c[4] = {bool(row & 1), bool(row & 2), bool(row & 4), bool(row & 8)};
    for (int variant = 0; variant < 16; ++variant) {
      const auto g = drive_by_case(c[0], c[1], c[2], c[3], variant);
      ASSERT_TRUE(validate(g).empty()) << row;
      const auto f = check_drive_by(g, detect_graph_ads(g, ad_cfg), RuleConfig{});
      EXPECT_EQ(f.size(), row == 15 ? 1u : 0u) << row << " variant " << variant;
    }
  }
}

TEST(DriveBy, ConfirmedDownloadIsClean) {
  auto g = drive_by_case(true, true, true, true);
  g.traffic[0].user_initiated = true;
  EXPECT_TRUE(check_drive_by(g, detect_graph_ads(g, AdFeatureConfig::defaults()), RuleConfig{}).empty());
}

TEST(DriveBy, BrowserActivityAfterClickIsClean) {
  auto g = drive_by_case(true, true, true, true);
  g.states[1].activity = "com.android.browser.BrowserActivity";
  g.states[1].kind = StateKind::external;
  EXPECT_TRUE(check_drive_by(g, detect_graph_ads(g, AdFeatureConfig::defaults()), RuleConfig{}).empty());
}

// ---- outside --------------------------------------------------------------

TEST(Outside, AdOnLauncher) {
  UTGraph g;
  g.app = meta();
  g.states.push_back(flat_state("main", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1)}));
  g.states.push_back(flat_state("home", {interstitial_node()}, {"com.google.android.gms.ads.InterstitialAd.show"},
                                "com.android.launcher3.Launcher", StateKind::external));
  g.transitions.push_back({"main", "home", {EventType::back, std::nullopt}});
  const auto f = check_outside(g, detect_graph_ads(g, AdFeatureConfig::defaults()));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].state_ids, (std::vector<std::string>{"home"}));
}

TEST(OutsideOracle, SetMembership) {
  const auto cfg = AdFeatureConfig::defaults();
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = random_graph(seed, 6, 10);
    const auto ads = detect_graph_ads(g, cfg);
    std::set<std::string> expect;
    const std::set<std::string> declared(g.app.activities.begin(), g.app.activities.end());
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      if (!declared.count(g.states[i].activity) && !ads[i].ads.empty()) expect.insert(g.states[i].id);
    }
    std::set<std::string> got;
    for (const auto& f : check_outside(g, ads)) got.insert(f.state_ids[0]);
    ASSERT_EQ(got, expect) << seed;
  }
}

// ---- frequent -------------------------------------------------------------

namespace {

UTGraph frequent_graph(int menus, int repeats) {
  UTGraph g;
  g.app = meta();
  std::vector<ViewNode> buttons;
  for (int j = 0; j < menus; ++j) {
    buttons.push_back(node("m" + std::to_string(j), "android.widget.Button",
                           {40 + 210 * j, 1390, 220 + 210 * j, 1530}, j + 1, true));
  }
  g.states.push_back(flat_state("main", buttons));
  g.states.push_back(flat_state("ad", {interstitial_node()}));
  for (int r = 0; r < repeats; ++r) {
    for (int j = 0; j < menus; ++j) g.transitions.push_back({"main", "ad", {EventType::click, "m" + std::to_string(j)}});
  }
  return g;
}

}  // namespace

TEST(Frequent, Boundaries) {
  const auto cfg = AdFeatureConfig::defaults();
  auto run = [&](const UTGraph& g) { return check_frequent(g, detect_graph_ads(g, cfg), RuleConfig{}); };
  EXPECT_EQ(run(frequent_graph(4, 1)).size(), 1u);
  EXPECT_TRUE(run(frequent_graph(3, 1)).empty());
  EXPECT_TRUE(run(frequent_graph(1, 10)).empty());
  EXPECT_EQ(run(frequent_graph(4, 3))[0].evidence.numbers.at("distinct_edges"), 4);
}

TEST(FrequentOracle, IncomingEdgeEnumeration) {
  const auto cfg = AdFeatureConfig::defaults();
  const RuleConfig rule;
  Rng pick(3);
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const int states = static_cast<int>(pick.uniform(2, 8));
    const auto g = random_graph(seed, states, 8, static_cast<int>(pick.uniform(2, 6)));
    const auto ads = detect_graph_ads(g, cfg);
    const auto counts = oracle_edge_counts(g);
    std::set<std::string> expect;
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      const bool large = std::any_of(ads[i].ads.begin(), ads[i].ads.end(),
                                     [](const DetectedAd& a) { return a.kind != AdKind::banner; });
      const auto it = counts.find(g.states[i].id);
      if (large && it != counts.end() && it->second > rule.frequent_threshold) expect.insert(g.states[i].id);
    }
    std::set<std::string> got;
    for (const auto& f : check_frequent(g, ads, rule)) {
      got.insert(f.state_ids[0]);
      ASSERT_EQ(f.evidence.numbers.at("distinct_edges"), counts.at(f.state_ids[0])) << seed;
    }
    ASSERT_EQ(got, expect) << seed;
  }
}

// ---- non-content ----------------------------------------------------------

TEST(NonContent, EmptyScreenNextToExit) {
  UTGraph g;
  g.app = meta();
  g.states.push_back(flat_state("exit", {node("btn_exit", "android.widget.Button", {540, 1450, 990, 1580}, 1, true)},
                                {}, "com.example.MainActivity", StateKind::exit));
  g.states.push_back(flat_state("blank", {interstitial_node()}));
  g.transitions.push_back({"exit", "blank", {EventType::click, "btn_exit"}});
  const auto f = check_non_content(g, detect_graph_ads(g, AdFeatureConfig::defaults()));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].state_ids, (std::vector<std::string>{"blank", "exit"}));
}

TEST(NonContent, BannerOnContentIsClean) {
  UTGraph g;
  g.app = meta();
  g.states.push_back(flat_state("main", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1),
                                         node("ad_banner", kGms, {0, 1676, 1080, 1776}, 2)}));
  EXPECT_TRUE(check_non_content(g, detect_graph_ads(g, AdFeatureConfig::defaults())).empty());
}

TEST(NonContentOracle, TagScan) {
  const auto cfg = AdFeatureConfig::defaults();
  auto tagged = [](StateKind k) {
    return k == StateKind::launch || k == StateKind::login || k == StateKind::exit ||
           k == StateKind::error || k == StateKind::thankyou;
  };
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = random_graph(seed, 7, 8);
    const auto ads = detect_graph_ads(g, cfg);
    std::set<std::pair<std::string, std::string>> expect;
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      const auto& st = g.states[i];
      bool flagged = tagged(st.kind);
      if (!flagged) {
        bool content = false;
        for (const auto& n : st.view_tree.nodes) content = content || (n.is_leaf() && !ads[i].is_ad(n.id));
        for (const auto& t : g.transitions) {
          if (content || t.event.type == EventType::app_start || t.source == t.target) continue;
          const std::string other = t.source == st.id ? t.target : t.target == st.id ? t.source : "";
          if (!other.empty() && tagged(g.find_state(other)->kind)) flagged = true;
        }
      }
      if (!flagged) continue;
      for (const auto& a : ads[i].ads) {
        if (a.kind != AdKind::banner) expect.insert({st.id, a.view_id});
      }
    }
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& f : check_non_content(g, ads)) got.insert({f.state_ids[0], f.view_ids[0]});
    ASSERT_EQ(got, expect) << seed;
  }
}

TEST(KindTagger, ActivityNames) {
  EXPECT_EQ(kind_from_activity_name("com.x.SplashActivity"), StateKind::launch);
  EXPECT_EQ(kind_from_activity_name("com.x.SignInActivity"), StateKind::login);
  EXPECT_EQ(kind_from_activity_name("com.x.QuitDialog"), StateKind::exit);
  EXPECT_EQ(kind_from_activity_name("com.x.MainActivity"), std::nullopt);
}

// ---- check_all ------------------------------------------------------------

TEST(CheckAll, InteractionPlusDriveBy) {
  auto g = exit_dialog_graph({40, 700, 1040, 1500});
  // Clicking the interstitial downloads an APK and stays in the activity.
  g.states.push_back(flat_state("after", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1)}, {}));
  g.transitions.push_back({"ad", "after", {EventType::click, "ad_inter"}});
  TrafficRecord r{"t1", "ad", "ad_inter", HttpMethod::GET, "http://x/a.apk",
                  "application/vnd.android.package-archive", 3000000, "504B030414000808", false};
  g.traffic.push_back(r);
  g.states[1].traffic_ids.push_back("t1");
  const auto rep = check_all(g, AdFeatureConfig::defaults(), RuleConfig{});
  EXPECT_TRUE(rep.fraudulent);
  EXPECT_EQ(count(rep, FraudType::interaction), 1u);
  EXPECT_EQ(count(rep, FraudType::drive_by), 1u);
}

TEST(CheckAll, CleanGraphHasNoFindings) {
  UTGraph g;
  g.app = meta();
  g.states.push_back(flat_state("main", {node("txt", "android.widget.TextView", {0, 0, 1080, 100}, 1),
                                         node("ad_banner", kGms, {0, 1676, 1080, 1776}, 2)}));
  const auto rep = check_all(g, AdFeatureConfig::defaults(), RuleConfig{});
  EXPECT_FALSE(rep.fraudulent);
  EXPECT_TRUE(rep.findings.empty());
  EXPECT_EQ(rep.config_hash.size(), 16u);
}

TEST(CheckAll, InvalidGraphRejected) {
  UTGraph g;
  g.app = meta();
  g.states.push_back(flat_state("a", {}));
  g.transitions.push_back({"a", "s9", {EventType::back, std::nullopt}});
  try {
    check_all(g, AdFeatureConfig::defaults(), RuleConfig{});
    FAIL();
  } catch (const InvalidGraph& e) {
    EXPECT_EQ(e.violations().front(), "transition 0: unknown target s9");
  }
}

// check_all is the union of the nine rules, deterministic, and disabling a
// rule removes exactly its findings.
TEST(CheckAllOracle, CompositionAndIndependence) {
  const auto ad_cfg = AdFeatureConfig::defaults();
  const RuleConfig rule;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_graph(seed, 8, 12);
    const auto ads = detect_graph_ads(g, ad_cfg);
    std::vector<FraudFinding> all;
    auto add = [&](std::vector<FraudFinding> v) { all.insert(all.end(), v.begin(), v.end()); };
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      add(check_hidden(g.states[i], ads[i].ads));
      add(check_size(g.states[i], ads[i].ads, g.screen, rule));
      add(check_number(g.states[i], ads[i].ads, g.screen, rule));
      add(check_overlap(g.states[i], ads[i].ads));
    }
    add(check_interaction(g, ads));
    add(check_drive_by(g, ads, rule));
    add(check_outside(g, ads));
    add(check_frequent(g, ads, rule));
    add(check_non_content(g, ads));
    const auto rep = check_all(g, ad_cfg, rule);
    for (auto& f : all) f.rule_config_hash = rep.config_hash;
    sort_findings(all);
    ASSERT_EQ(rep.findings, all) << seed;
    ASSERT_EQ(check_all(g, ad_cfg, rule), rep);

    for (auto t : kAllFraudTypes) {
      RuleConfig off = rule;
      off.disabled.insert(t);
      auto reduced = check_all(g, ad_cfg, off);
      std::vector<FraudFinding> expect;
      for (auto f : rep.findings) {
        if (f.type == t) continue;
        f.rule_config_hash = reduced.config_hash;
        expect.push_back(f);
      }
      ASSERT_EQ(reduced.findings, expect) << seed << " " << to_string(t);
    }
  }
}

TEST(CheckAll, FindingsSortedByTypeStateView) {
  const auto rep = check_all(random_graph(4, 8, 14), AdFeatureConfig::defaults(), RuleConfig{});
  auto sorted = rep.findings;
  sort_findings(sorted);
  EXPECT_EQ(sorted, rep.findings);
}

// ---- configs and reports --------------------------------------------------

TEST(RuleConfigJson, RoundTripAndValidation) {
  RuleConfig cfg;
  cfg.disabled = {FraudType::size};
  cfg.frequent_threshold = 5;
  EXPECT_EQ(parse_rule_config(rule_config_to_json(cfg)), cfg);
  EXPECT_THROW(parse_rule_config(R"({"number_area_cap": 0})"), std::invalid_argument);
  EXPECT_THROW(parse_rule_config(R"({"frequent_threshold": 0})"), std::invalid_argument);
  EXPECT_THROW(parse_rule_config(R"({"disabled": ["bogus"]})"), ParseError);
  EXPECT_THROW(parse_rule_config(R"({"extra": 1})"), ParseError);
}

TEST(RuleConfigJson, HashTracksConfig) {
  const auto ad_cfg = AdFeatureConfig::defaults();
  RuleConfig a;
  RuleConfig b;
  b.number_area_cap = 0.6;
  EXPECT_EQ(config_hash(ad_cfg, a), config_hash(ad_cfg, RuleConfig{}));
  EXPECT_NE(config_hash(ad_cfg, a), config_hash(ad_cfg, b));
}

TEST(Report, JsonRoundTripAndText) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rep = check_all(random_graph(seed, 8, 12), AdFeatureConfig::defaults(), RuleConfig{});
    const auto text = report_to_json(rep);
    EXPECT_EQ(report_from_json(text), rep) << seed;
    EXPECT_EQ(report_to_json(report_from_json(text)), text);
    const auto human = render_text(rep);
    EXPECT_NE(human.find(rep.package), std::string::npos);
  }
}
