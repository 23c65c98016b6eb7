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

#include "adfraud/model_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_support.hpp"

namespace adfraud {

namespace {

using json::Field;
using json::OJson;

OJson write_traffic_template(const TrafficTemplate& t) {
  OJson j;
  j["method"] = std::string(to_string(t.method));
  j["url"] = t.url;
  j["response_content_type"] = t.response_content_type;
  j["response_length"] = t.response_length;
  j["body_magic"] = t.body_magic;
  j["user_initiated"] = t.user_initiated;
  return j;
}

TrafficTemplate read_traffic_template(const Field& f) {
  f.expect_object({"method", "url", "response_content_type", "response_length", "body_magic",
                   "user_initiated"});
  TrafficTemplate t;
  t.method = json::parse_enum<HttpMethod>(f.at("method"), parse_http_method, "method");
  t.url = f.at("url").str();
  t.response_content_type = f.at("response_content_type").str();
  t.response_length = f.at("response_length").integer();
  t.body_magic = f.at("body_magic").str();
  t.user_initiated = f.at("user_initiated").boolean();
  return t;
}

std::vector<FraudType> read_types(const Field& f) {
  std::vector<FraudType> out;
  for (const auto& item : f.items()) {
    out.push_back(json::parse_enum<FraudType>(item, parse_fraud_type, "fraud type"));
  }
  return out;
}

OJson write_types(const std::vector<FraudType>& types) {
  OJson j = OJson::array();
  for (auto t : types) j.push_back(std::string(to_string(t)));
  return j;
}

}  // namespace

std::string serialize_model(const AppModel& m) {
  OJson screens = OJson::array();
  for (const auto& s : m.screens) {
    OJson j;
    j["id"] = s.id;
    j["activity"] = s.activity;
    j["kind"] = std::string(to_string(s.kind));
    j["ad_load_traces"] = s.ad_load_traces;
    j["ad_view_ids"] = s.ad_view_ids;
    j["view_tree"] = json::write_view_tree(s.view_tree);
    screens.push_back(std::move(j));
  }
  OJson handlers = OJson::array();
  for (const auto& h : m.handlers) {
    OJson effect;
    effect["kind"] = std::string(to_string(h.effect.kind));
    effect["target"] = h.effect.target;
    if (h.effect.traffic) effect["traffic"] = write_traffic_template(*h.effect.traffic);
    OJson j;
    j["screen"] = h.screen;
    j["view_id"] = h.view_id;
    j["event"] = std::string(to_string(h.event));
    j["effect"] = std::move(effect);
    handlers.push_back(std::move(j));
  }
  OJson behaviors = OJson::array();
  for (const auto& b : m.ad_behaviors) {
    OJson j;
    j["type"] = std::string(to_string(b.type));
    j["variant"] = b.variant;
    j["screens"] = b.screens;
    behaviors.push_back(std::move(j));
  }
  OJson faults = OJson::array();
  for (const auto& f : m.faults) {
    OJson j;
    j["kind"] = std::string(to_string(f.kind));
    j["screen"] = f.screen;
    j["view_id"] = f.view_id;
    faults.push_back(std::move(j));
  }
  OJson doc;
  doc["meta"] = json::write_meta(m.meta);
  doc["screen"] = json::write_screen(m.screen);
  doc["launch_screen"] = m.launch_screen;
  doc["seed"] = m.seed;
  doc["screens"] = std::move(screens);
  doc["handlers"] = std::move(handlers);
  doc["ad_behaviors"] = std::move(behaviors);
  doc["faults"] = std::move(faults);
  return json::dump(doc);
}

AppModel deserialize_model(std::string_view text) {
  const auto doc = json::parse_document(text);
  const Field root(doc, "");
  root.expect_object({"meta", "screen", "launch_screen", "seed", "screens", "handlers"},
                     {"ad_behaviors", "faults"});
  AppModel m;
  m.meta = json::read_meta(root.at("meta"));
  m.screen = json::read_screen(root.at("screen"));
  m.launch_screen = root.at("launch_screen").str();
  m.seed = root.at("seed").uint64();
  for (const auto& f : root.at("screens").items()) {
    f.expect_object({"id", "activity", "kind", "view_tree"}, {"ad_load_traces", "ad_view_ids"});
    ScreenTemplate s;
    s.id = f.at("id").str();
    s.activity = f.at("activity").str();
    s.kind = json::parse_enum<StateKind>(f.at("kind"), parse_state_kind, "state kind");
    if (auto t = f.opt("ad_load_traces")) s.ad_load_traces = t->strings();
    if (auto a = f.opt("ad_view_ids")) s.ad_view_ids = a->strings();
    s.view_tree = json::read_view_tree(f.at("view_tree"));
    m.screens.push_back(std::move(s));
  }
  for (const auto& f : root.at("handlers").items()) {
    f.expect_object({"screen", "view_id", "event", "effect"});
    Handler h;
    h.screen = f.at("screen").str();
    h.view_id = f.at("view_id").str();
    h.event = json::parse_enum<EventType>(f.at("event"), parse_event_type, "event type");
    const auto e = f.at("effect");
    e.expect_object({"kind", "target"}, {"traffic"});
    h.effect.kind = json::parse_enum<EffectKind>(e.at("kind"), parse_effect_kind, "effect kind");
    h.effect.target = e.at("target").str();
    if (auto t = e.opt("traffic")) h.effect.traffic = read_traffic_template(*t);
    m.handlers.push_back(std::move(h));
  }
  if (auto list = root.opt("ad_behaviors")) {
    for (const auto& f : list->items()) {
      f.expect_object({"type", "variant", "screens"});
      AdBehavior b;
      b.type = json::parse_enum<FraudType>(f.at("type"), parse_fraud_type, "fraud type");
      b.variant = f.at("variant").str();
      b.screens = f.at("screens").strings();
      m.ad_behaviors.push_back(std::move(b));
    }
  }
  if (auto list = root.opt("faults")) {
    for (const auto& f : list->items()) {
      f.expect_object({"kind", "screen", "view_id"});
      ModelFault mf;
      mf.kind = json::parse_enum<FaultKind>(f.at("kind"), parse_fault_kind, "fault kind");
      mf.screen = f.at("screen").str();
      mf.view_id = f.at("view_id").str();
      m.faults.push_back(std::move(mf));
    }
  }
  return m;
}

std::string serialize_manifest(const Manifest& manifest) {
  OJson apps = OJson::array();
  for (const auto& a : manifest.apps) {
    OJson j;
    j["file"] = a.file;
    j["package"] = a.package;
    j["fraud_types"] = write_types(a.fraud_types);
    apps.push_back(std::move(j));
  }
  OJson doc;
  doc["seed"] = manifest.seed;
  doc["apps"] = std::move(apps);
  return json::dump(doc);
}

Manifest deserialize_manifest(std::string_view text) {
  const auto doc = json::parse_document(text);
  const Field root(doc, "");
  root.expect_object({"seed", "apps"});
  Manifest m;
  m.seed = root.at("seed").uint64();
  for (const auto& f : root.at("apps").items()) {
    f.expect_object({"file", "package", "fraud_types"});
    m.apps.push_back({f.at("file").str(), f.at("package").str(), read_types(f.at("fraud_types"))});
  }
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

Manifest write_benchmark(const std::filesystem::path& dir, const std::vector<AppModel>& apps,
                         std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  Manifest manifest;
  manifest.seed = seed;
  for (std::size_t i = 0; i < apps.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "app_%03zu.json", i);
    write_file(dir / name, serialize_model(apps[i]));
    const auto& label = apps[i].meta.label;
    manifest.apps.push_back(
        {name, apps[i].meta.package, label ? label->fraud_types : std::vector<FraudType>{}});
  }
  write_file(dir / "manifest.json", serialize_manifest(manifest));
  return manifest;
}

}  // namespace adfraud
