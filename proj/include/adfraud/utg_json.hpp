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

#include <string>
#include <string_view>

#include "adfraud/json_error.hpp"
#include "adfraud/utg.hpp"

namespace adfraud {

/// Canonical UTF-8 JSON: fixed field order, two-space indent, trailing newline.
/// serialize(deserialize(serialize(g))) == serialize(g) byte for byte.
std::string serialize(const UTGraph& graph);

/// Strict inverse of serialize. Field order is irrelevant; unknown or missing
/// fields and type mismatches throw ParseError.
UTGraph deserialize(std::string_view text);

}  // namespace adfraud
