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

// Strict JSON reading shared by every on-disk format: unknown fields are
// rejected and every error carries the JSON pointer of the offending value.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/json_error.hpp"
#include "adfraud/utg.hpp"
#include "json.hpp"

namespace adfraud::json {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

/// Parses text, converting syntax errors into ParseError with line/column.
Json parse_document(std::string_view text);

class Field {
 public:
  Field(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& value() const { return *value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const;

  /// Requires an object whose keys are a subset of required ∪ optional and a
  /// superset of required.
  void expect_object(std::initializer_list<std::string_view> required,
                     std::initializer_list<std::string_view> optional = {}) const;

  Field at(std::string_view key) const;
  std::optional<Field> opt(std::string_view key) const;

  std::string str() const;
  std::int64_t integer() const;
  std::uint64_t uint64() const;
  int int32() const;
  double number() const;
  bool boolean() const;
  std::vector<Field> items() const;
  std::vector<std::string> strings() const;

 private:
  const Json* value_;
  std::string path_;
};

template <typename E, typename ParseFn>
E parse_enum(const Field& f, ParseFn parse, std::string_view what) {
  const auto s = f.str();
  const auto v = parse(s);
  if (!v) f.fail("unknown " + std::string(what) + " '" + s + "'");
  return *v;
}

OJson write_bounds(const Bounds& b);
Bounds read_bounds(const Field& f);

OJson write_meta(const AppMeta& meta);
AppMeta read_meta(const Field& f);

OJson write_screen(const Screen& s);
Screen read_screen(const Field& f);

OJson write_view_tree(const ViewTree& tree);
ViewTree read_view_tree(const Field& f);

OJson write_event(const Event& e);
Event read_event(const Field& f);

OJson write_traffic(const TrafficRecord& t);
TrafficRecord read_traffic(const Field& f);

std::string dump(const OJson& j);

}  // namespace adfraud::json
