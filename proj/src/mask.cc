// Copyright 2026 The foodsynth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "foodsynth/mask.h"

#include <algorithm>

namespace foodsynth {

bool operator==(const BinaryMask& a, const BinaryMask& b) {
  if (a.height != b.height || a.width != b.width) return false;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if ((a.data[i] != 0) != (b.data[i] != 0)) return false;
  }
  return true;
}

std::int64_t MaskArea(const BinaryMask& mask) {
  return std::count_if(mask.data.begin(), mask.data.end(), [](std::uint8_t v) { return v != 0; });
}

BoundingBox MaskBox(const BinaryMask& mask) {
  int x0 = mask.width, y0 = mask.height, x1 = -1, y1 = -1;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.at(y, x)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 < 0) return {};
  return {static_cast<double>(x0), static_cast<double>(y0), static_cast<double>(x1 - x0 + 1),
          static_cast<double>(y1 - y0 + 1)};
}

}  // namespace foodsynth
