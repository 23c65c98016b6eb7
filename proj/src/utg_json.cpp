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

#include "adfraud/utg_json.hpp"

#include <algorithm>
#include <limits>

#include "json_support.hpp"

namespace adfraud {
namespace json {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Byte offsets from nlohmann are 1-based and point past the bad token.
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     "syntax error (byte " + std::to_string(byte) + ")");
  }
}

void Field::fail(const std::string& what) const {
  throw ParseError(path_.empty() ? std::string("document") : path_, what);
}

void Field::expect_object(std::initializer_list<std::string_view> required,
                          std::initializer_list<std::string_view> optional) const {
  if (!value_->is_object()) fail("expected an object");
  for (const auto& key : required) {
    if (!value_->contains(std::string(key))) {
      fail("missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, _] : value_->items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail("unknown field '" + key + "'");
  }
}

Field Field::at(std::string_view key) const {
  const std::string k(key);
  if (!value_->is_object() || !value_->contains(k)) fail("missing field '" + k + "'");
  return Field(value_->at(k), path_ + "/" + k);
}

std::optional<Field> Field::opt(std::string_view key) const {
  const std::string k(key);
  if (!value_->is_object() || !value_->contains(k)) return std::nullopt;
  return Field(value_->at(k), path_ + "/" + k);
}

std::string Field::str() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

std::int64_t Field::integer() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<std::int64_t>();
}

std::uint64_t Field::uint64() const {
  if (!value_->is_number_unsigned()) fail("expected a non-negative integer");
  return value_->get<std::uint64_t>();
}

int Field::int32() const {
  const auto v = integer();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail("integer out of range");
  }
  return static_cast<int>(v);
}

double Field::number() const {
  if (!value_->is_number()) fail("expected a number");
  return value_->get<double>();
}

bool Field::boolean() const {
  if (!value_->is_boolean()) fail("expected a boolean");
  return value_->get<bool>();
}

std::vector<Field> Field::items() const {
  if (!value_->is_array()) fail("expected an array");
  std::vector<Field> out;
  out.reserve(value_->size());
  for (std::size_t i = 0; i < value_->size(); ++i) {
    out.emplace_back((*value_)[i], path_ + "/" + std::to_string(i));
  }
  return out;
}

std::vector<std::string> Field::strings() const {
  std::vector<std::string> out;
  for (const auto& f : items()) out.push_back(f.str());
  return out;
}

OJson write_bounds(const Bounds& b) { return OJson::array({b.left, b.top, b.right, b.bottom}); }

Bounds read_bounds(const Field& f) {
  const auto v = f.items();
  if (v.size() != 4) f.fail("bounds must have 4 integers [l,t,r,b]");
  return {v[0].int32(), v[1].int32(), v[2].int32(), v[3].int32()};
}

OJson write_meta(const AppMeta& meta) {
  OJson j;
  j["package"] = meta.package;
  j["permissions"] = meta.permissions;
  j["activities"] = meta.activities;
  j["detected_ad_libs"] = meta.detected_ad_libs;
  if (meta.label) {
    OJson types = OJson::array();
    for (auto t : meta.label->fraud_types) types.push_back(std::string(to_string(t)));
    j["label"] = OJson{{"fraud_types", types}};
  }
  return j;
}

AppMeta read_meta(const Field& f) {
  f.expect_object({"package", "permissions", "activities", "detected_ad_libs"}, {"label"});
  AppMeta m;
  m.package = f.at("package").str();
  m.permissions = f.at("permissions").strings();
  m.activities = f.at("activities").strings();
  m.detected_ad_libs = f.at("detected_ad_libs").strings();
  if (auto label = f.opt("label")) {
    label->expect_object({"fraud_types"});
    GroundTruth gt;
    for (const auto& t : label->at("fraud_types").items()) {
      gt.fraud_types.push_back(parse_enum<FraudType>(t, parse_fraud_type, "fraud type"));
    }
    m.label = gt;
  }
  return m;
}

OJson write_screen(const Screen& s) { return OJson{{"width", s.width}, {"height", s.height}}; }

Screen read_screen(const Field& f) {
  f.expect_object({"width", "height"});
  return {f.at("width").int32(), f.at("height").int32()};
}

OJson write_view_tree(const ViewTree& tree) {
  OJson nodes = OJson::array();
  for (const auto& n : tree.nodes) {
    OJson j;
    j["id"] = n.id;
    j["class"] = n.class_name;
    j["resource_id"] = n.resource_id;
    j["text"] = n.text;
    j["bounds"] = write_bounds(n.bounds);
    j["z"] = n.z;
    j["clickable"] = n.clickable;
    j["children"] = n.children;
    nodes.push_back(std::move(j));
  }
  OJson j;
  j["root"] = tree.root;
  j["nodes"] = std::move(nodes);
  return j;
}

ViewTree read_view_tree(const Field& f) {
  f.expect_object({"root", "nodes"});
  ViewTree tree;
  tree.root = f.at("root").str();
  for (const auto& nf : f.at("nodes").items()) {
    nf.expect_object(
        {"id", "class", "resource_id", "text", "bounds", "z", "clickable", "children"});
    ViewNode n;
    n.id = nf.at("id").str();
    n.class_name = nf.at("class").str();
    n.resource_id = nf.at("resource_id").str();
    n.text = nf.at("text").str();
    n.bounds = read_bounds(nf.at("bounds"));
    n.z = nf.at("z").int32();
    n.clickable = nf.at("clickable").boolean();
    n.children = nf.at("children").strings();
    tree.nodes.push_back(std::move(n));
  }
  return tree;
}

OJson write_event(const Event& e) {
  OJson j;
  j["type"] = std::string(to_string(e.type));
  if (e.view_id) j["view_id"] = *e.view_id;
  return j;
}

Event read_event(const Field& f) {
  f.expect_object({"type"}, {"view_id"});
  Event e;
  e.type = parse_enum<EventType>(f.at("type"), parse_event_type, "event type");
  if (auto v = f.opt("view_id")) e.view_id = v->str();
  return e;
}

OJson write_traffic(const TrafficRecord& t) {
  OJson j;
  j["id"] = t.id;
  j["state_id"] = t.state_id;
  if (t.view_id) j["view_id"] = *t.view_id;
  j["method"] = std::string(to_string(t.method));
  j["url"] = t.url;
  j["response_content_type"] = t.response_content_type;
  j["response_length"] = t.response_length;
  j["body_magic"] = t.body_magic;
  j["user_initiated"] = t.user_initiated;
  return j;
}

TrafficRecord read_traffic(const Field& f) {
  f.expect_object({"id", "state_id", "method", "url", "response_content_type",
                   "response_length", "body_magic", "user_initiated"},
                  {"view_id"});
  TrafficRecord t;
  t.id = f.at("id").str();
  t.state_id = f.at("state_id").str();
  if (auto v = f.opt("view_id")) t.view_id = v->str();
  t.method = parse_enum<HttpMethod>(f.at("method"), parse_http_method, "method");
  t.url = f.at("url").str();
  t.response_content_type = f.at("response_content_type").str();
  t.response_length = f.at("response_length").integer();
  t.body_magic = f.at("body_magic").str();
  t.user_initiated = f.at("user_initiated").boolean();
  return t;
}

std::string dump(const OJson& j) { return j.dump(2) + "\n"; }

}  // namespace json

std::string serialize(const UTGraph& graph) {
  using json::OJson;
  OJson states = OJson::array();
  for (const auto& s : graph.states) {
    OJson j;
    j["id"] = s.id;
    j["activity"] = s.activity;
    j["kind"] = std::string(to_string(s.kind));
    j["ad_load_traces"] = s.ad_load_traces;
    j["traffic_ids"] = s.traffic_ids;
    j["view_tree"] = json::write_view_tree(s.view_tree);
    states.push_back(std::move(j));
  }
  OJson transitions = OJson::array();
  for (const auto& t : graph.transitions) {
    OJson j;
    j["source"] = t.source;
    j["target"] = t.target;
    j["event"] = json::write_event(t.event);
    transitions.push_back(std::move(j));
  }
  OJson traffic = OJson::array();
  for (const auto& t : graph.traffic) traffic.push_back(json::write_traffic(t));

  OJson doc;
  doc["app"] = json::write_meta(graph.app);
  doc["screen"] = json::write_screen(graph.screen);
  doc["states"] = std::move(states);
  doc["transitions"] = std::move(transitions);
  doc["traffic"] = std::move(traffic);
  return json::dump(doc);
}

UTGraph deserialize(std::string_view text) {
  const auto doc = json::parse_document(text);
  const json::Field root(doc, "");
  root.expect_object({"app", "screen", "states", "transitions", "traffic"});

  UTGraph g;
  g.app = json::read_meta(root.at("app"));
  g.screen = json::read_screen(root.at("screen"));
  for (const auto& sf : root.at("states").items()) {
    sf.expect_object({"id", "activity", "kind", "ad_load_traces", "traffic_ids", "view_tree"});
    UIState s;
    s.id = sf.at("id").str();
    s.activity = sf.at("activity").str();
    s.kind = json::parse_enum<StateKind>(sf.at("kind"), parse_state_kind, "state kind");
    s.ad_load_traces = sf.at("ad_load_traces").strings();
    s.traffic_ids = sf.at("traffic_ids").strings();
    s.view_tree = json::read_view_tree(sf.at("view_tree"));
    g.states.push_back(std::move(s));
  }
  for (const auto& tf : root.at("transitions").items()) {
    tf.expect_object({"source", "target", "event"});
    Transition t;
    t.source = tf.at("source").str();
    t.target = tf.at("target").str();
    t.event = json::read_event(tf.at("event"));
    g.transitions.push_back(std::move(t));
  }
  for (const auto& rf : root.at("traffic").items()) {
    g.traffic.push_back(json::read_traffic(rf));
  }
  return g;
}

}  // namespace adfraud
