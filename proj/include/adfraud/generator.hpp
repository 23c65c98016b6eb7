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
#include <map>
#include <string>
#include <vector>

#include "adfraud/simulator.hpp"
#include "adfraud/taxonomy.hpp"

namespace adfraud {

struct BenchmarkSpec {
  int fraud = 50;
  int clean = 50;
  /// Primary fraud type per fraud app. Empty means default_distribution()
  /// when fraud == 50, otherwise an even round-robin split.
  std::map<FraudType, int> distribution;
  /// Fraud apps that additionally carry a drive-by download.
  int dual = 4;
  std::uint64_t seed = 1;
};

/// 50 apps over all nine types, at least two each.
std::map<FraudType, int> default_distribution();

/// Throws std::invalid_argument when the distribution does not sum to
/// spec.fraud, has negative counts, or dual exceeds the eligible apps.
std::vector<AppModel> generate_benchmark(const BenchmarkSpec& spec);

/// One app embedding exactly `frauds` (empty for a compliant app). With
/// `with_ads` false the app ships no ad library at all.
AppModel generate_app(const std::string& package, const std::vector<FraudType>& frauds,
                      std::uint64_t seed, bool with_ads = true);

/// Fixed suite used to compare exploration strategies.
std::vector<AppModel> exploration_suite(std::uint64_t seed = 7, int count = 30);

/// Ad screens tied to app exit: ads on exit-kind screens and screens entered
/// from an exit-kind screen.
std::vector<std::string> exit_ad_screens(const AppModel& model);

}  // namespace adfraud
