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

#include <stdexcept>
#include <string>
#include <vector>

namespace adfraud {

/// A graph that breaks structural invariants; carries every violation.
class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(std::vector<std::string> violations)
      : std::runtime_error(summary(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string summary(const std::vector<std::string>& v) {
    std::string s = "invalid graph (" + std::to_string(v.size()) + " violation(s))";
    if (!v.empty()) s += ": " + v.front();
    return s;
  }

  std::vector<std::string> violations_;
};

}  // namespace adfraud
