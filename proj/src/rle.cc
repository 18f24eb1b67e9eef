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
#include "foodsynth/rle.h"

#include <algorithm>
#include <string>

namespace foodsynth {

Rle EncodeRle(const BinaryMask& mask) {
  Rle rle{mask.height, mask.width, {}};
  bool current = false;
  std::uint32_t run = 0;
  for (int x = 0; x < mask.width; ++x) {
    for (int y = 0; y < mask.height; ++y) {
      const bool v = mask.at(y, x);
      if (v != current) {
        rle.counts.push_back(run);
        run = 0;
        current = v;
      }
      ++run;
    }
  }
  rle.counts.push_back(run);
  return rle;
}

void CheckRle(const Rle& rle) {
  if (rle.height < 0 || rle.width < 0) throw RleError("RLE size must be non-negative");
  std::uint64_t total = 0;
  for (std::uint32_t c : rle.counts) total += c;
  const std::uint64_t expected = static_cast<std::uint64_t>(rle.height) * rle.width;
  if (total != expected) {
    throw RleError("RLE counts sum to " + std::to_string(total) + " but size " +
                   std::to_string(rle.height) + "x" + std::to_string(rle.width) +
                   " needs " + std::to_string(expected));
  }
}

BinaryMask DecodeRle(const Rle& rle) {
  CheckRle(rle);
  BinaryMask mask(rle.height, rle.width);
  std::uint64_t pos = 0;
  for (std::size_t i = 0; i < rle.counts.size(); ++i) {
    const bool v = (i % 2) == 1;
    for (std::uint32_t k = 0; k < rle.counts[i]; ++k, ++pos) {
      if (!v) continue;
      const int x = static_cast<int>(pos / rle.height);
      const int y = static_cast<int>(pos % rle.height);
      mask.set(y, x);
    }
  }
  return mask;
}

std::int64_t RleArea(const Rle& rle) {
  std::int64_t area = 0;
  for (std::size_t i = 1; i < rle.counts.size(); i += 2) area += rle.counts[i];
  return area;
}

BoundingBox RleBox(const Rle& rle) {
  if (rle.height == 0) return {};
  std::int64_t pos = 0;
  std::int64_t x0 = rle.width, x1 = -1, y0 = rle.height, y1 = -1;
  for (std::size_t i = 0; i < rle.counts.size(); ++i) {
    const std::int64_t start = pos;
    pos += rle.counts[i];
    if (i % 2 == 0 || rle.counts[i] == 0) continue;
    const std::int64_t end = pos - 1;
    const std::int64_t xs = start / rle.height;
    const std::int64_t xe = end / rle.height;
    x0 = std::min(x0, xs);
    x1 = std::max(x1, xe);
    if (xs != xe) {
      // A run crossing a column boundary touches the last row of one column
      // and the first row of the next.
      y0 = 0;
      y1 = rle.height - 1;
    } else {
      y0 = std::min(y0, start % rle.height);
      y1 = std::max(y1, end % rle.height);
    }
  }
  if (x1 < 0) return {};
  return {static_cast<double>(x0), static_cast<double>(y0), static_cast<double>(x1 - x0 + 1),
          static_cast<double>(y1 - y0 + 1)};
}

std::int64_t RleIntersectionArea(const Rle& a, const Rle& b) {
  if (a.height != b.height || a.width != b.width) {
    throw RleError("RLE size mismatch: " + std::to_string(a.height) + "x" +
                   std::to_string(a.width) + " vs " + std::to_string(b.height) + "x" +
                   std::to_string(b.width));
  }
  // Walk both run lists in lockstep.
  std::size_t ia = 0, ib = 0;
  std::uint64_t left_a = a.counts.empty() ? 0 : a.counts[0];
  std::uint64_t left_b = b.counts.empty() ? 0 : b.counts[0];
  std::int64_t inter = 0;
  while (ia < a.counts.size() && ib < b.counts.size()) {
    if (left_a == 0) {
      if (++ia < a.counts.size()) left_a = a.counts[ia];
      continue;
    }
    if (left_b == 0) {
      if (++ib < b.counts.size()) left_b = b.counts[ib];
      continue;
    }
    const std::uint64_t step = std::min(left_a, left_b);
    if ((ia % 2 == 1) && (ib % 2 == 1)) inter += static_cast<std::int64_t>(step);
    left_a -= step;
    left_b -= step;
  }
  return inter;
}

}  // namespace foodsynth
