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
#ifndef FOODSYNTH_RLE_H_
#define FOODSYNTH_RLE_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "foodsynth/mask.h"

namespace foodsynth {

// Uncompressed COCO run-length encoding. Runs scan the mask column-major
// (down column 0, then column 1, ...) and alternate background/foreground,
// starting with a (possibly empty) background run.
struct Rle {
  int height = 0;
  int width = 0;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const Rle&, const Rle&) = default;
};

class RleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rle EncodeRle(const BinaryMask& mask);
// Throws RleError when the counts do not sum to height * width.
BinaryMask DecodeRle(const Rle& rle);
// Throws RleError on a bad count sum.
void CheckRle(const Rle& rle);

std::int64_t RleArea(const Rle& rle);
BoundingBox RleBox(const Rle& rle);
// Number of pixels set in both. Throws RleError when sizes differ.
std::int64_t RleIntersectionArea(const Rle& a, const Rle& b);

}  // namespace foodsynth

#endif  // FOODSYNTH_RLE_H_
