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

#include "adfraud/traffic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "adfraud/errors.hpp"

namespace adfraud {

std::string_view to_string(PayloadClass p) {
  switch (p) {
    case PayloadClass::apk_archive: return "apk_archive";
    case PayloadClass::generic_binary: return "generic_binary";
    case PayloadClass::media: return "media";
    case PayloadClass::page: return "page";
  }
  return "?";
}

std::vector<unsigned char> decode_magic(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("body magic '" + std::string(hex) + "' has odd length");
  }
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    const int lc = std::tolower(static_cast<unsigned char>(c));
    if (lc >= 'a' && lc <= 'f') return lc - 'a' + 10;
    throw std::invalid_argument("body magic '" + std::string(hex) + "' is not hex");
  };
  std::vector<unsigned char> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<unsigned char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return bytes;
}

std::optional<DownloadEvent> classify_download(const TrafficRecord& record) {
  static const std::vector<unsigned char> zip = {0x50, 0x4B, 0x03, 0x04};
  const auto bytes = decode_magic(record.body_magic);

  std::optional<PayloadClass> cls;
  if (bytes.size() >= zip.size() && std::equal(zip.begin(), zip.end(), bytes.begin())) {
    cls = PayloadClass::apk_archive;
  } else if (record.response_content_type == "application/octet-stream" &&
             record.response_length > 0) {
    cls = PayloadClass::generic_binary;
  }
  if (!cls) return std::nullopt;
  return DownloadEvent{record.id, record.state_id, record.view_id, *cls, record.user_initiated};
}

Association associate(const UTGraph& graph) {
  Association out;
  std::vector<std::string> unknown;
  for (const auto& rec : graph.traffic) {
    const UIState* state = graph.find_state(rec.state_id);
    if (!state) {
      unknown.push_back("traffic " + rec.id + ": unknown state " + rec.state_id);
      continue;
    }
    if (rec.view_id && !state->view_tree.find(*rec.view_id)) {
      out.diagnostics.push_back("traffic " + rec.id + ": view " + *rec.view_id +
                                " not found in state " + rec.state_id);
      continue;
    }
    out.links.push_back({rec.id, rec.state_id, rec.view_id});
  }
  if (!unknown.empty()) throw InvalidGraph(std::move(unknown));
  return out;
}

}  // namespace adfraud
