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

#include "adfraud/generator.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "adfraud/adview.hpp"
#include "adfraud/rng.hpp"

namespace adfraud {

namespace {

// Layout constants for a 1080x1776 screen. The button band sits between the
// list and the bottom banner band; centered interstitials end above it.
constexpr int kW = 1080;
constexpr int kH = 1776;
constexpr int kBandTop = 1390;
constexpr int kBandBottom = 1530;
constexpr int kInterBottom = 1330;

Bounds band_slot(int j) { return {40 + j * 210, kBandTop, 40 + j * 210 + 200, kBandBottom}; }

struct AdStyle {
  std::string class_name;
  std::string resource_id;
};

class ScreenBuilder {
 public:
  ScreenBuilder(std::string id, std::string activity, StateKind kind) {
    s_.id = std::move(id);
    s_.activity = std::move(activity);
    s_.kind = kind;
    s_.view_tree.root = "root";
    s_.view_tree.nodes.push_back(
        {"root", "android.widget.FrameLayout", "", "", {0, 0, kW, kH}, 0, false, {}});
  }

  void view(const std::string& parent, const std::string& id, const std::string& cls,
            const std::string& rid, Bounds b, bool clickable = false, std::string text = "") {
    auto& nodes = s_.view_tree.nodes;
    const auto it = std::find_if(nodes.begin(), nodes.end(),
                                 [&](const ViewNode& n) { return n.id == parent; });
    it->children.push_back(id);
    nodes.push_back({id, cls, rid, std::move(text), b, ++z_, clickable, {}});
  }

  void ad(const std::string& parent, const std::string& id, const AdStyle& style, Bounds b) {
    view(parent, id, style.class_name, style.resource_id, b, true);
    s_.ad_view_ids.push_back(id);
  }

  void trace(const std::string& t) { s_.ad_load_traces.push_back(t); }

  ScreenTemplate done() { return std::move(s_); }

 private:
  ScreenTemplate s_;
  int z_ = 0;
};

constexpr std::array<std::string_view, 24> kWordsA = {
    "sunny", "pixel", "quick", "happy", "magic", "smart", "daily", "lucky",
    "super", "tiny",  "swift", "bright", "cosmic", "urban", "retro", "zen",
    "blue",  "red",   "green", "golden", "silver", "wild", "calm", "bold"};
constexpr std::array<std::string_view, 24> kWordsB = {
    "notes", "weather", "puzzle", "flashlight", "recipes", "radio", "compass", "diary",
    "quiz",  "tuner",   "timer",  "scanner",    "wallpaper", "music", "chess", "sudoku",
    "news",  "jokes",   "maps",   "cleaner",    "reader", "solitaire", "bible", "fitness"};

struct NetworkPick {
  std::string prefix;  // with trailing dot
  std::string lib;
};

// Knobs that turn the compliant skeleton into a fraudulent app.
struct Plan {
  bool with_ads = true;
  bool clean_interstitial = false;
  bool detail_banner = false;
  bool update_button = false;
  char hidden = 0;         // 'A' main, 'B' main_scrolled
  bool tiny_banner = false;
  bool number = false;
  char overlap = 0;        // 'A' toolbar, 'B' load-more in main_scrolled
  char interaction = 0;    // 'A' play button, 'B' central exit button
  char drive_by = 0;       // 'A' main banner, 'B' scrolled-list banner only
  bool outside = false;
  int menus = 0;           // frequent: band buttons opening one interstitial
  char non_content = 0;    // 'A' splash ad, 'B' exit dialog ad, 'C' goodbye ad
};

class AppBuilder {
 public:
  AppBuilder(const std::string& package, std::uint64_t seed) : rng_(seed) {
    m_.seed = seed;
    m_.meta.package = package;
  }

  AppModel build(const std::vector<FraudType>& frauds, bool with_ads) {
    plan_.with_ads = with_ads;
    for (auto t : frauds) apply(t);
    if (!with_ads) plan_ = Plan{false};

    const auto& nets = known_ad_networks();
    const auto& net = nets[static_cast<std::size_t>(rng_.uniform(0, nets.size() - 1))];
    net_.prefix = net.package_prefixes.front();
    net_.lib = net_.prefix.substr(0, net_.prefix.size() - 1);

    const std::string& pkg = m_.meta.package;
    splash_ = pkg + ".SplashActivity";
    main_ = pkg + ".MainActivity";
    detail_ = pkg + ".DetailActivity";
    ad_activity_ = net_.prefix + "AdActivity";
    m_.meta.permissions = {"android.permission.INTERNET", "android.permission.ACCESS_NETWORK_STATE"};
    if (rng_.chance(0.5)) m_.meta.permissions.push_back("android.permission.WAKE_LOCK");
    if (rng_.chance(0.3)) m_.meta.permissions.push_back("android.permission.VIBRATE");
    m_.meta.activities = {splash_, main_, detail_};
    if (plan_.with_ads) {
      m_.meta.activities.push_back(ad_activity_);
      m_.meta.detected_ad_libs = {net_.lib};
    }
    if (!frauds.empty()) m_.meta.label = GroundTruth{frauds};
    else m_.meta.label = GroundTruth{};

    banner_style_ = style();
    banner_ = plan_.tiny_banner ? tiny_banner() : bottom_banner();

    build_splash();
    build_main(false);
    build_main(true);
    build_detail();
    build_exit();
    build_external();
    m_.launch_screen = "splash";
    return std::move(m_);
  }

 private:
  void apply(FraudType t) {
    auto variant = [&](const char* opts) {
      const std::string s(opts);
      return s[static_cast<std::size_t>(rng_.uniform(0, static_cast<std::int64_t>(s.size()) - 1))];
    };
    switch (t) {
      case FraudType::hidden: plan_.hidden = variant("AB"); break;
      case FraudType::size: plan_.tiny_banner = true; break;
      case FraudType::number: plan_.number = true; break;
      case FraudType::overlap: plan_.overlap = variant("AB"); break;
      case FraudType::interaction: plan_.interaction = variant("AB"); break;
      case FraudType::drive_by: plan_.drive_by = variant("AB"); break;
      case FraudType::outside: plan_.outside = true; break;
      case FraudType::frequent: plan_.menus = static_cast<int>(rng_.uniform(4, 5)); break;
      case FraudType::non_content: plan_.non_content = variant("ABC"); break;
    }
    m_.ad_behaviors.push_back({t, std::string(1, variant_of(t)), {}});
  }

  char variant_of(FraudType t) const {
    switch (t) {
      case FraudType::hidden: return plan_.hidden;
      case FraudType::overlap: return plan_.overlap;
      case FraudType::interaction: return plan_.interaction;
      case FraudType::non_content: return plan_.non_content;
      case FraudType::drive_by: return plan_.drive_by;
      default: return 'A';
    }
  }

  void touch(FraudType t, const std::string& screen) {
    for (auto& b : m_.ad_behaviors) {
      if (b.type == t && std::find(b.screens.begin(), b.screens.end(), screen) == b.screens.end()) {
        b.screens.push_back(screen);
      }
    }
  }

  AdStyle style() {
    switch (rng_.uniform(0, 4)) {
      case 0: return {net_.prefix + "AdView", "ad_view"};
      case 1: return {net_.prefix + "widget.BannerAdView", "banner_container"};
      case 2: return {"android.webkit.WebView", "banner_web"};
      case 3: return {"android.widget.ImageView", "promo_image"};
      default: return {"com.pop.is.ar", "pop"};
    }
  }

  std::string trace() const { return net_.prefix + "AdLoader.loadAd"; }

  Bounds bottom_banner() {
    static constexpr std::array<std::pair<int, int>, 4> kSizes = {
        {{960, 150}, {728, 90}, {640, 100}, {320, 50}}};
    const auto [w, h] = kSizes[static_cast<std::size_t>(rng_.uniform(0, 3))];
    const int left = (kW - w) / 2;
    return {left, kH - 10 - h, left + w, kH - 10};
  }

  Bounds tiny_banner() {
    const int w = static_cast<int>(rng_.uniform(100, 160));
    const int h = static_cast<int>(rng_.uniform(20, 28));
    return {kW - 10 - w, kH - 10 - h, kW - 10, kH - 10};
  }

  // Centered interstitial with a clearly compliant area ratio.
  Bounds interstitial(int bottom = kInterBottom, int max_h = 900) {
    for (;;) {
      const int w = 2 * static_cast<int>(rng_.uniform(380, 480));
      const int h = static_cast<int>(rng_.uniform(600, max_h));
      const double r = static_cast<double>(w) * h / (kW * kH);
      if (r < 0.25 || r > 0.45) continue;
      const int left = (kW - w) / 2;
      return {left, bottom - h, left + w, bottom};
    }
  }

  TrafficTemplate page_traffic() {
    return {HttpMethod::GET, "http://click." + net_.lib + ".com/landing?id=" +
                                 std::to_string(rng_.uniform(1000, 9999)),
            "text/html", rng_.uniform(8000, 60000), "3C21444F43545950", false};
  }

  TrafficTemplate apk_traffic(bool user_initiated) {
    const bool octet = rng_.chance(0.3);
    return {HttpMethod::GET, "http://dl.apkcdn.net/" + m_.meta.package + "_" +
                                 std::to_string(rng_.uniform(100, 999)) + ".apk",
            octet ? "application/octet-stream" : "application/vnd.android.package-archive",
            rng_.uniform(1500000, 9000000), "504B030414000808", user_initiated};
  }

  void on(const std::string& screen, const std::string& view, EventType e, EffectKind k,
          const std::string& target, std::optional<TrafficTemplate> traffic = std::nullopt) {
    m_.handlers.push_back({screen, view, e, {k, target, std::move(traffic)}});
  }

  void on_ad_click(const std::string& screen, const std::string& ad) {
    on(screen, ad, EventType::click, EffectKind::show_ad, "browser", page_traffic());
  }

  void build_splash() {
    ScreenBuilder b("splash", splash_, StateKind::launch);
    b.view("root", "logo", "android.widget.TextView", "logo", {240, 600, 840, 900});
    // A tappable caption rather than a button: splash screens rarely have one.
    b.view("root", "txt_continue", "android.widget.TextView", "tap_to_continue",
           {240, 1200, 840, 1300}, true, "Tap to continue");
    m_.screens.push_back(b.done());
    on("splash", "", EventType::back, EffectKind::exit, "launcher");

    if (plan_.non_content == 'A') {
      ScreenBuilder s("splash_ad", ad_activity_, StateKind::content);
      s.trace(trace());
      s.ad("root", "ad_splash", style(), {0, 0, kW, kH});
      m_.screens.push_back(s.done());
      touch(FraudType::non_content, "splash_ad");
      on("splash", "txt_continue", EventType::click, EffectKind::show_ad, "splash_ad");
      on("splash_ad", "", EventType::back, EffectKind::navigate, "main");
      on_ad_click("splash_ad", "ad_splash");
    } else {
      on("splash", "txt_continue", EventType::click, EffectKind::navigate, "main");
    }
  }

  void build_main(bool scrolled) {
    const std::string id = scrolled ? "main_scrolled" : "main";
    ScreenBuilder b(id, main_, StateKind::content);
    if (plan_.with_ads) b.trace(trace());

    b.view("root", "toolbar", "android.widget.LinearLayout", "toolbar", {0, 0, kW, 160});
    b.view("toolbar", "title", "android.widget.TextView", "title", {40, 40, 600, 120});
    const bool toolbar_buttons = plan_.overlap == 'A' && !scrolled;
    if (toolbar_buttons) {
      for (int k = 0; k < 4; ++k) {
        b.view("toolbar", "tb_" + std::to_string(k), "android.widget.ImageButton",
               "toolbar_action_" + std::to_string(k), {660 + k * 100, 35, 750 + k * 100, 125},
               true);
      }
    }
    b.view("root", "list", "android.widget.ScrollView", "list", {0, 160, kW, 1340});
    const int first = scrolled ? 3 : 0;
    for (int i = 0; i < 6; ++i) {
      b.view("list", "item_" + std::to_string(first + i), "android.widget.TextView", "item",
             {20, 170 + i * 190, kW - 20, 350 + i * 190});
    }
    if (plan_.interaction == 'A') {
      b.view("root", "btn_play", "android.widget.Button", "btn_play", {390, 700, 690, 840}, true,
             "Play");
    }

    b.view("root", "actions", "android.widget.LinearLayout", "actions", {0, 1360, kW, 1560});
    std::vector<std::pair<std::string, std::string>> band;  // view id -> target
    if (plan_.menus > 0) {
      for (int k = 0; k < plan_.menus; ++k) band.push_back({"btn_menu_" + std::to_string(k), "interstitial_freq"});
      if (plan_.menus < 5) band.push_back({"btn_detail", "detail"});
    } else {
      band.push_back({"btn_detail", "detail"});
      if (plan_.clean_interstitial) band.push_back({"btn_next", "interstitial_next"});
      band.push_back({"btn_share", ""});
    }
    for (std::size_t j = 0; j < band.size(); ++j) {
      b.view("actions", band[j].first, "android.widget.Button", band[j].first,
             band_slot(static_cast<int>(j)), true);
    }

    const bool load_more = plan_.overlap == 'B' && scrolled;
    if (load_more) {
      b.view("root", "btn_load_more", "android.widget.Button", "load_more",
             {std::max(0, banner_.left - 40), banner_.top - 50, banner_.left + 360, banner_.top + 40},
             true, "Load more");
      touch(FraudType::overlap, id);
    }
    if (plan_.with_ads) b.ad("root", "ad_banner", banner_style_, banner_);
    if (plan_.overlap == 'A' && !scrolled) {
      b.ad("root", "ad_top", style(), {60, 10, 1020, 160});
      touch(FraudType::overlap, id);
    }
    if ((plan_.hidden == 'A' && !scrolled) || (plan_.hidden == 'B' && scrolled)) {
      b.view("root", "btn_email", "android.widget.Button", "btn_email",
             {banner_.right - 220, banner_.top - 30, banner_.right - 20, banner_.bottom - 10}, true,
             "Email");
      touch(FraudType::hidden, id);
    }
    if (plan_.tiny_banner) touch(FraudType::size, id);
    m_.screens.push_back(b.done());

    for (const auto& [view, target] : band) {
      if (!target.empty()) {
        const auto k = target == "detail" ? EffectKind::navigate : EffectKind::show_ad;
        on(id, view, EventType::click, k, target);
      }
    }
    if (!scrolled) on(id, "list", EventType::scroll, EffectKind::navigate, "main_scrolled");
    on(id, "", EventType::back, EffectKind::navigate, "exit_dialog");
    if (plan_.interaction == 'A') {
      on(id, "btn_play", EventType::click, EffectKind::show_ad, "interstitial_play");
    }
    if (plan_.with_ads) {
      if (plan_.drive_by == 'A' || (plan_.drive_by == 'B' && scrolled)) {
        on(id, "ad_banner", EventType::click, EffectKind::navigate, id, apk_traffic(false));
        touch(FraudType::drive_by, id);
      } else {
        on_ad_click(id, "ad_banner");
      }
    }
    if (plan_.overlap == 'A' && !scrolled) on_ad_click(id, "ad_top");

    if (scrolled) return;
    if (plan_.menus > 0) {
      add_interstitial("interstitial_freq", "ad_freq", interstitial(), "main");
      touch(FraudType::frequent, "interstitial_freq");
    }
    if (plan_.clean_interstitial && plan_.menus == 0) {
      add_interstitial("interstitial_next", "ad_inter", interstitial(), "main");
    }
    if (plan_.interaction == 'A') {
      add_interstitial("interstitial_play", "ad_play", interstitial(), "main");
      touch(FraudType::interaction, "main");
      touch(FraudType::interaction, "interstitial_play");
    }
  }

  // Dimmed ad activity with a close button outside the creative.
  void add_interstitial(const std::string& id, const std::string& ad, Bounds b,
                        const std::string& back_to, bool ad_only = false,
                        EffectKind back_kind = EffectKind::navigate) {
    ScreenBuilder s(id, ad_activity_, StateKind::content);
    s.trace(trace());
    if (!ad_only) s.view("root", "dim", "android.view.View", "scrim", {0, 0, kW, kH});
    s.ad("root", ad, style(), b);
    if (!ad_only) {
      s.view("root", "btn_close", "android.widget.Button", "btn_close",
             {b.right - 110, b.top - 110, b.right - 10, b.top - 10}, true, "X");
      on(id, "btn_close", EventType::click, back_kind, back_to);
    }
    m_.screens.push_back(s.done());
    on(id, "", EventType::back, back_kind, back_to);
    on_ad_click(id, ad);
  }

  void build_detail() {
    ScreenBuilder b("detail", detail_, StateKind::content);
    if (plan_.number) {
      b.trace(trace());
      b.view("root", "body", "android.widget.TextView", "body", {40, 170, 1040, 290});
      b.view("root", "btn_back", "android.widget.Button", "btn_back", band_slot(0), true);
      const int w = 2 * static_cast<int>(rng_.uniform(470, 500));
      const int h = static_cast<int>(rng_.uniform(800, 860));
      b.ad("root", "ad_detail_top", style(), {60, 10, 1020, 160});
      b.ad("root", "ad_detail_center", style(), {(kW - w) / 2, 300, (kW - w) / 2 + w, 300 + h});
      b.ad("root", "ad_detail_bottom", style(), {60, kH - 160, 1020, kH - 10});
      touch(FraudType::number, "detail");
      for (const char* a : {"ad_detail_top", "ad_detail_center", "ad_detail_bottom"}) {
        on_ad_click("detail", a);
      }
    } else {
      b.view("root", "toolbar", "android.widget.LinearLayout", "toolbar", {0, 0, kW, 160});
      b.view("toolbar", "title", "android.widget.TextView", "title", {40, 40, 600, 120});
      b.view("root", "body", "android.widget.TextView", "body", {40, 200, 1040, 1200});
      b.view("root", "btn_back", "android.widget.Button", "btn_back", band_slot(0), true);
      if (plan_.update_button) {
        b.view("root", "btn_update", "android.widget.Button", "btn_update", band_slot(1), true);
        on("detail", "btn_update", EventType::click, EffectKind::navigate, "detail",
           apk_traffic(true));
      }
      if (plan_.detail_banner) {
        b.trace(trace());
        b.ad("root", "ad_detail", style(), bottom_banner());
        on_ad_click("detail", "ad_detail");
      }
    }
    m_.screens.push_back(b.done());
    on("detail", "btn_back", EventType::click, EffectKind::navigate, "main");
    on("detail", "", EventType::back, EffectKind::navigate, "main");
  }

  void build_exit() {
    ScreenBuilder b("exit_dialog", main_, StateKind::exit);
    b.view("root", "dim", "android.view.View", "scrim", {0, 0, kW, kH});
    if (plan_.non_content == 'B') {
      b.trace(trace());
      b.ad("root", "ad_exit", style(), interstitial(1040, 760));
      touch(FraudType::non_content, "exit_dialog");
    }
    b.view("root", "panel", "android.widget.LinearLayout", "dialog_panel", {90, 1080, 990, 1580});
    b.view("panel", "message", "android.widget.TextView", "message", {130, 1100, 950, 1180},
           false, "Quit?");
    if (plan_.interaction == 'B') {
      b.view("panel", "btn_exit", "android.widget.Button", "btn_exit", {340, 1200, 740, 1320}, true);
      b.view("panel", "btn_cancel", "android.widget.Button", "btn_cancel", {340, 1400, 740, 1530},
             true);
    } else {
      b.view("panel", "btn_cancel", "android.widget.Button", "btn_cancel", {130, 1400, 520, 1530},
             true);
      b.view("panel", "btn_exit", "android.widget.Button", "btn_exit", {560, 1400, 950, 1530}, true);
    }
    m_.screens.push_back(b.done());
    on("exit_dialog", "btn_cancel", EventType::click, EffectKind::navigate, "main");
    on("exit_dialog", "", EventType::back, EffectKind::navigate, "main");
    if (plan_.non_content == 'B') on_ad_click("exit_dialog", "ad_exit");

    if (plan_.interaction == 'B') {
      add_interstitial("interstitial_exit", "ad_exit_inter", interstitial(), "launcher", false,
                       EffectKind::exit);
      on("exit_dialog", "btn_exit", EventType::click, EffectKind::show_ad, "interstitial_exit");
      touch(FraudType::interaction, "exit_dialog");
      touch(FraudType::interaction, "interstitial_exit");
    } else if (plan_.non_content == 'C') {
      add_interstitial("goodbye", "ad_goodbye", interstitial(), "launcher", true, EffectKind::exit);
      on("exit_dialog", "btn_exit", EventType::click, EffectKind::show_ad, "goodbye");
      touch(FraudType::non_content, "goodbye");
    } else if (plan_.outside) {
      on("exit_dialog", "btn_exit", EventType::click, EffectKind::exit, "launcher_ad");
      touch(FraudType::outside, "launcher_ad");
    } else {
      on("exit_dialog", "btn_exit", EventType::click, EffectKind::exit, "launcher");
    }
  }

  void build_external() {
    auto launcher = [&](const std::string& id, bool with_ad) {
      ScreenBuilder b(id, "com.android.launcher3.Launcher", StateKind::external);
      b.view("root", "workspace", "android.widget.FrameLayout", "workspace", {0, 0, kW, kH});
      for (int i = 0; i < 8; ++i) {
        const int x = 40 + (i % 4) * 260;
        const int y = 400 + (i / 4) * 300;
        b.view("workspace", "icon_" + std::to_string(i), "android.widget.TextView", "icon",
               {x, y, x + 220, y + 260});
      }
      if (with_ad) {
        b.trace(trace());
        b.ad("root", "ad_launcher", style(), {60, 10, 1020, 160});
      }
      m_.screens.push_back(b.done());
    };
    launcher("launcher", false);
    if (plan_.outside) launcher("launcher_ad", true);

    ScreenBuilder b("browser", "com.android.browser.BrowserActivity", StateKind::external);
    b.view("root", "page", "android.webkit.WebView", "page", {0, 0, kW, kH});
    m_.screens.push_back(b.done());
  }

 public:
  void clean_options() {
    plan_.clean_interstitial = rng_.chance(0.5);
    plan_.detail_banner = rng_.chance(0.5);
    plan_.update_button = rng_.chance(0.3);
  }

 private:
  Rng rng_;
  AppModel m_;
  Plan plan_;
  NetworkPick net_;
  AdStyle banner_style_;
  Bounds banner_;
  std::string splash_, main_, detail_, ad_activity_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + i + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string package_name(Rng& rng, std::set<std::string>& used) {
  for (;;) {
    std::string p = "com." + std::string(rng.pick(kWordsA)) + "." + std::string(rng.pick(kWordsB));
    if (used.insert(p).second) return p;
    p += std::to_string(used.size());
    if (used.insert(p).second) return p;
  }
}

}  // namespace

AppModel generate_app(const std::string& package, const std::vector<FraudType>& frauds,
                      std::uint64_t seed, bool with_ads) {
  AppBuilder b(package, seed);
  if (frauds.empty()) b.clean_options();
  return b.build(frauds, with_ads);
}

std::map<FraudType, int> default_distribution() {
  return {{FraudType::hidden, 3},   {FraudType::size, 3},        {FraudType::number, 3},
          {FraudType::overlap, 4},  {FraudType::interaction, 9}, {FraudType::drive_by, 7},
          {FraudType::outside, 5},  {FraudType::frequent, 7},    {FraudType::non_content, 9}};
}

std::vector<AppModel> generate_benchmark(const BenchmarkSpec& spec) {
  if (spec.fraud < 0 || spec.clean < 0) throw std::invalid_argument("app counts must be >= 0");
  auto dist = spec.distribution;
  if (dist.empty() && spec.fraud > 0) {
    if (spec.fraud == 50) {
      dist = default_distribution();
    } else {
      for (int i = 0; i < spec.fraud; ++i) ++dist[kAllFraudTypes[static_cast<std::size_t>(i % 9)]];
    }
  }
  int sum = 0;
  for (const auto& [t, n] : dist) {
    if (n < 0) throw std::invalid_argument("negative count for " + std::string(to_string(t)));
    sum += n;
  }
  if (sum != spec.fraud) {
    throw std::invalid_argument("distribution sums to " + std::to_string(sum) + ", expected " +
                                std::to_string(spec.fraud));
  }
  const int eligible = spec.fraud - (dist.count(FraudType::drive_by) ? dist[FraudType::drive_by] : 0);
  if (spec.dual < 0 || spec.dual > eligible) {
    throw std::invalid_argument("dual must be in [0, " + std::to_string(eligible) + "]");
  }

  // Label list: fraud apps in type order, then clean apps; shuffled below.
  std::vector<std::vector<FraudType>> labels;
  for (auto t : kAllFraudTypes) {
    for (int i = 0; i < (dist.count(t) ? dist[t] : 0); ++i) labels.push_back({t});
  }
  int dual = spec.dual;
  // Spread secondary drive-by over different primary types.
  for (std::size_t round = 0; dual > 0 && round < labels.size(); ++round) {
    for (auto t : kAllFraudTypes) {
      if (dual == 0 || t == FraudType::drive_by) continue;
      std::size_t seen = 0;
      for (auto& l : labels) {
        if (l.front() != t) continue;
        if (seen++ == round && l.size() == 1) {
          l.push_back(FraudType::drive_by);
          --dual;
          break;
        }
      }
    }
  }
  for (int i = 0; i < spec.clean; ++i) labels.push_back({});

  Rng rng(mix(spec.seed, 0));
  for (std::size_t i = labels.size(); i > 1; --i) {
    std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  std::set<std::string> used;
  std::vector<AppModel> apps;
  int clean_seen = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto pkg = package_name(rng, used);
    // Every tenth compliant app ships without an ad library.
    const bool with_ads = !labels[i].empty() || (clean_seen++ % 10) != 9;
    apps.push_back(generate_app(pkg, labels[i], mix(spec.seed, i + 1), with_ads));
  }
  return apps;
}

std::vector<AppModel> exploration_suite(std::uint64_t seed, int count) {
  std::vector<AppModel> apps;
  Rng rng(mix(seed, 0));
  std::set<std::string> used;
  for (int i = 0; i < count; ++i) {
    std::vector<FraudType> frauds;
    if (i % 10 != 9) frauds.push_back(kAllFraudTypes[static_cast<std::size_t>(i % 9)]);
    apps.push_back(generate_app(package_name(rng, used), frauds, mix(seed, static_cast<std::uint64_t>(i) + 1)));
  }
  return apps;
}

std::vector<std::string> exit_ad_screens(const AppModel& model) {
  std::set<std::string> exit_targets;
  for (const auto& h : model.handlers) {
    const ScreenTemplate* s = model.find_screen(h.screen);
    if (s && s->kind == StateKind::exit) exit_targets.insert(h.effect.target);
  }
  std::vector<std::string> out;
  for (const auto& s : model.screens) {
    if (s.ad_view_ids.empty()) continue;
    if (s.kind == StateKind::exit || exit_targets.count(s.id)) out.push_back(s.id);
  }
  return out;
}

}  // namespace adfraud
