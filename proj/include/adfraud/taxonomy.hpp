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

#include <array>
#include <optional>
#include <string_view>

namespace adfraud {

/// The nine ad-fraud types. The first four are static placement frauds
/// (decidable from one UI state), the rest are dynamic interaction frauds.
enum class FraudType {
  hidden,
  size,
  number,
  overlap,
  interaction,
  drive_by,
  outside,
  frequent,
  non_content,
};

inline constexpr std::array<FraudType, 9> kAllFraudTypes = {
    FraudType::hidden,      FraudType::size,     FraudType::number,
    FraudType::overlap,     FraudType::interaction, FraudType::drive_by,
    FraudType::outside,     FraudType::frequent, FraudType::non_content,
};

std::string_view to_string(FraudType t);
std::optional<FraudType> parse_fraud_type(std::string_view s);

inline bool is_static_placement(FraudType t) {
  return t == FraudType::hidden || t == FraudType::size || t == FraudType::number ||
         t == FraudType::overlap;
}

}  // namespace adfraud
