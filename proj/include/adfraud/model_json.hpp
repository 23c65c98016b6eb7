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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "adfraud/simulator.hpp"

namespace adfraud {

/// Canonical JSON of an app model (same conventions as the UTG format).
std::string serialize_model(const AppModel& model);
/// Throws ParseError with the JSON pointer of the offending value.
AppModel deserialize_model(std::string_view text);

struct ManifestEntry {
  std::string file;
  std::string package;
  std::vector<FraudType> fraud_types;

  bool operator==(const ManifestEntry&) const = default;
};

struct Manifest {
  std::uint64_t seed = 0;
  std::vector<ManifestEntry> apps;

  bool operator==(const Manifest&) const = default;
};

std::string serialize_manifest(const Manifest& manifest);
Manifest deserialize_manifest(std::string_view text);

/// Writes app_NNN.json per model plus manifest.json; returns the manifest.
Manifest write_benchmark(const std::filesystem::path& dir, const std::vector<AppModel>& apps,
                         std::uint64_t seed);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace adfraud
