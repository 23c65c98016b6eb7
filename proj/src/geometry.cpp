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

#include "adfraud/geometry.hpp"

#include <algorithm>
#include <vector>

namespace adfraud {

bool intersects(const Bounds& a, const Bounds& b) {
  return std::max(a.left, b.left) < std::min(a.right, b.right) &&
         std::max(a.top, b.top) < std::min(a.bottom, b.bottom);
}

Bounds intersection(const Bounds& a, const Bounds& b) {
  if (!intersects(a, b)) {
    return {};
  }
  return {std::max(a.left, b.left), std::max(a.top, b.top),
          std::min(a.right, b.right), std::min(a.bottom, b.bottom)};
}

std::int64_t intersection_area(const Bounds& a, const Bounds& b) {
  return intersection(a, b).area();
}

Bounds clamp_to(const Bounds& b, const Screen& screen) {
  auto clamp = [](int v, int hi) { return std::clamp(v, 0, hi); };
  Bounds out{clamp(b.left, screen.width), clamp(b.top, screen.height),
             clamp(b.right, screen.width), clamp(b.bottom, screen.height)};
  out.right = std::max(out.right, out.left);
  out.bottom = std::max(out.bottom, out.top);
  return out;
}

std::int64_t union_area(std::span<const Bounds> rects) {
  // Coordinate compression: sum every compressed cell covered by any rect.
  std::vector<int> xs;
  std::vector<int> ys;
  for (const auto& r : rects) {
    if (r.area() <= 0) continue;
    xs.push_back(r.left);
    xs.push_back(r.right);
    ys.push_back(r.top);
    ys.push_back(r.bottom);
  }
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      const Bounds cell{xs[i], ys[j], xs[i + 1], ys[j + 1]};
      const bool covered = std::any_of(rects.begin(), rects.end(), [&](const Bounds& r) {
        return r.left <= cell.left && cell.right <= r.right && r.top <= cell.top &&
               cell.bottom <= r.bottom;
      });
      if (covered) total += cell.area();
    }
  }
  return total;
}

}  // namespace adfraud
