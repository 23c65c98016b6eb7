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
#include <string>
#include <vector>

#include "adfraud/utg.hpp"

namespace adfraud {

enum class PayloadClass { apk_archive, generic_binary, media, page };

std::string_view to_string(PayloadClass p);

struct DownloadEvent {
  std::string traffic_id;
  std::string state_id;
  std::optional<std::string> view_id;
  PayloadClass payload_class = PayloadClass::generic_binary;
  bool user_initiated = false;

  bool operator==(const DownloadEvent&) const = default;
};

/// Local-file-header signature of ZIP archives; APKs are ZIP files.
inline constexpr std::string_view kZipMagic = "504B0304";

/// Decodes the hex body magic. Throws std::invalid_argument on odd length or
/// non-hex characters.
std::vector<unsigned char> decode_magic(std::string_view hex);

/// apk_archive when the body starts with the ZIP signature, generic_binary
/// for non-empty application/octet-stream, otherwise not a download.
std::optional<DownloadEvent> classify_download(const TrafficRecord& record);

struct TrafficLink {
  std::string traffic_id;
  std::string state_id;
  std::optional<std::string> view_id;

  bool operator==(const TrafficLink&) const = default;
};

struct Association {
  /// Records whose view link (if any) names a view of their state.
  std::vector<TrafficLink> links;
  /// One message per dangling view link, naming the record.
  std::vector<std::string> diagnostics;
};

/// Verifies each record's view link against its state's view tree. Throws
/// InvalidGraph when a record names an unknown state.
Association associate(const UTGraph& graph);

}  // namespace adfraud
