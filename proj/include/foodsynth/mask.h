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
#ifndef FOODSYNTH_MASK_H_
#define FOODSYNTH_MASK_H_

#include <cstdint>
#include <vector>

namespace foodsynth {

// [x, y, width, height] in pixels, origin top-left.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Row-major binary image; nonzero bytes are foreground.
struct BinaryMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> data;

  BinaryMask() = default;
  BinaryMask(int h, int w) : height(h), width(w), data(static_cast<std::size_t>(h) * w, 0) {}

  bool at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int y, int x, bool v = true) {
    data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }

  // Compares foreground sets, not raw byte values.
  friend bool operator==(const BinaryMask& a, const BinaryMask& b);
};

std::int64_t MaskArea(const BinaryMask& mask);
// Tight box of the set pixels; all zeros for an empty mask.
BoundingBox MaskBox(const BinaryMask& mask);

}  // namespace foodsynth

#endif  // FOODSYNTH_MASK_H_
