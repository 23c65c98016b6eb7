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

#include <string>
#include <vector>

#include "adfraud/adview.hpp"

namespace adfraud {

// Frequent English words containing "ad", pinned here so detection does not
// depend on which dictionary tier is installed.
const std::vector<std::string>& default_whitelist() {
  static const std::vector<std::string> words = {
    "abroad", "academic", "academics", "academy", "adapt", "adaptable", "adaptation",
    "adapted", "adapter", "adapters", "adaptive", "adaptor", "adaptors", "add", "addable", "added", "addend",
    "addendum", "adder", "adders", "addict", "addiction", "adding", "addition",
    "additional", "additionally", "additions", "additive", "additives", "address",
    "addressable", "addressbook", "addressed", "addresses", "addressing", "adds",
    "adept", "adequate", "adequately", "adhere", "adherence", "adhesive", "adieu",
    "adjacency", "adjacent", "adjective", "adjoin", "adjourn", "adjust", "adjustable",
    "adjusted", "adjuster", "adjusting", "adjustment", "adjustments", "adjusts",
    "admin", "administer", "administered", "administration", "administrative",
    "administrator", "administrators", "admins", "admirable", "admiral", "admiration",
    "admire", "admission", "admissions", "admit", "admitted", "admittedly", "adobe",
    "adolescent", "adopt", "adopted", "adoption", "adorable", "adore", "adorn",
    "adrenaline", "adrift", "adroit", "adult", "adults", "advance", "advanced",
    "advancement", "advances", "advancing", "advantage", "advantages", "advent",
    "adventure", "adventures", "adverb", "adversary", "adverse", "adversity", "advice",
    "advisable", "advise", "advised", "adviser", "advisor", "advisory", "advocacy",
    "advocate", "ahead", "already", "arcade", "armada", "avocado", "bad", "badge",
    "badges", "badly", "badminton", "ballad", "balladeer", "bead", "beads",
    "blade", "blades", "bread", "breadcrumb", "breadcrumbs", "breadth", "brigade",
    "broad", "broadband", "broadcast", "broadcaster", "broadcasting", "broadcasts",
    "broaden", "broader", "broadly", "cadence", "cadet", "cascade", "cascaded",
    "cascading", "cicada", "crusade", "dad", "daddy", "dead", "deadline", "deadlines",
    "deadlock", "deadly", "decade", "decades", "degrade", "degraded", "downgrade",
    "download", "downloadable", "downloaded", "downloader", "downloaders",
    "downloading", "downloads", "dreadful", "escapade", "evade", "facade", "fade",
    "faded", "fadein", "fadeout", "fader", "fades", "fading", "gadget", "gadgets",
    "glad", "gladly", "grad", "grade", "graded", "grader", "grades", "gradient",
    "gradients", "grading", "gradle", "gradual", "gradually", "graduate", "grenade",
    "head", "headache", "headed", "header", "headers", "heading", "headings",
    "headless", "headline", "headlines", "headlong", "headphone", "headphones",
    "headquarters", "headroom", "heads", "headset", "headway", "instead", "invade",
    "invader", "jade", "keypad", "lad", "ladder", "ladders", "laden", "ladies", "lady",
    "launchpad", "lazyload", "lead", "leader", "leaders", "leadership", "leading",
    "leads", "lemonade", "load", "loadable", "loaded", "loader", "loaders", "loading",
    "loadings", "loadmore", "loads", "mad", "madam", "made", "meadow", "metadata",
    "monad", "multithread", "multithreaded", "nomad", "notepad", "offload", "overhead",
    "overload", "overloaded", "overloading", "pad", "padded", "padding", "paddings",
    "paddle", "pads", "parade", "payload", "payloads", "persuade", "pinpad", "preload",
    "preloaded", "preloader", "preloading", "quad", "quadrant", "quadratic",
    "quadruple", "radar", "radial", "radian", "radians", "radiant", "radiate",
    "radiation", "radiator", "radical", "radio", "radiobutton", "radiogroup", "radios",
    "radius", "radix", "read", "readable", "reader", "readers", "readily", "readiness",
    "reading", "readings", "readme", "readonly", "reads", "readwrite", "ready",
    "reload", "reloaded", "reloading", "reloads", "road", "roadmap", "roads",
    "roadside", "sad", "saddle", "sadly", "salad", "shade", "shaded", "shader",
    "shaders", "shades", "shading", "shadow", "shadowed", "shadowing", "shadows",
    "shadowy", "spread", "spreading", "spreads", "spreadsheet", "squad", "stead",
    "steadily", "steady", "thread", "threaded", "threading", "threadpool", "threads",
    "toad", "tornado", "touchpad", "trackpad", "trade", "traded", "trader", "traders",
    "trades", "trading", "tradition", "traditional", "tread", "treadmill", "unload",
    "unloaded", "unloading", "unread", "upgrade", "upgraded", "upgrades", "upgrading",
    "upload", "uploaded", "uploader", "uploading", "uploads", "wad", "wade",
    "widespread", "workload", "workloads",
  };
  return words;
}

const std::vector<AdNetwork>& known_ad_networks() {
  static const std::vector<AdNetwork> networks = {
      {"Admob", {"com.google.ads.", "com.google.android.gms.ads."}},
      {"Appbrain", {"com.appbrain."}},
      {"Waps", {"cn.waps."}},
      {"feiwo", {"com.feiwo."}},
      {"BaiduAd", {"com.baidu.mobads."}},
      {"Anzhi", {"com.anzhi."}},
      {"Youmi", {"net.youmi."}},
      {"Doodlemobile", {"com.doodlemobile."}},
      {"Adsmogo", {"com.adsmogo."}},
      {"Kugo", {"com.kuguo."}},
      {"Adwhirl", {"com.adwhirl."}},
      {"Dianjin", {"com.nd.dianjin."}},
      {"Vpon", {"com.vpon."}},
      {"Inmobi", {"com.inmobi."}},
      {"Apperhand", {"com.apperhand."}},
      {"Startapp", {"com.startapp."}},
      {"Mobwin", {"com.tencent.mobwin."}},
      {"Jumptap", {"com.jumptap."}},
      {"Fyber", {"com.fyber.", "com.sponsorpay."}},
      {"Domob", {"cn.domob."}},
  };
  return networks;
}

}  // namespace adfraud
