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
#include <span>

namespace adfraud {

/// Axis-aligned rectangle in screen pixels, origin top-left.
///
/// Half-open on the right and bottom edges: a view at (0,0,100,100) covers
/// pixels x in [0,100) and y in [0,100). Two views sharing only an edge do
/// not intersect.
struct Bounds {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;

  int width() const { return right - left; }
  int height() const { return bottom - top; }
  std::int64_t area() const {
    return static_cast<std::int64_t>(width()) * height();
  }
  bool valid() const {
    return left >= 0 && top >= 0 && left <= right && top <= bottom;
  }

  bool operator==(const Bounds&) const = default;
};

struct Screen {
  int width = 1080;
  int height = 1776;

  std::int64_t area() const {
    return static_cast<std::int64_t>(width) * height;
  }
  bool operator==(const Screen&) const = default;
};

bool intersects(const Bounds& a, const Bounds& b);
std::int64_t intersection_area(const Bounds& a, const Bounds& b);

/// The overlapping rectangle; empty (zero area) when the inputs are disjoint.
Bounds intersection(const Bounds& a, const Bounds& b);

/// Clamp to the screen rectangle.
Bounds clamp_to(const Bounds& b, const Screen& screen);

/// Area of the union of a set of rectangles; overlaps count once.
std::int64_t union_area(std::span<const Bounds> rects);

}  // namespace adfraud
