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
#ifndef FOODSYNTH_TESTS_SUPPORT_BRUTE_FORCE_SCORER_H_
#define FOODSYNTH_TESTS_SUPPORT_BRUTE_FORCE_SCORER_H_

#include <array>
#include <optional>
#include <vector>

#include "foodsynth/coco.h"

namespace foodsynth::testing {

// Straight-line reference scorer used to cross-check the evaluator. It shares
// no code with it: masks are expanded pixel by pixel, boxes are enumerated
// on the integer grid (so box coordinates must be integers), and every step
// is a plain loop.
struct OracleOptions {
  bool mask_iou = true;
  bool apply_nms = true;
  double nms_threshold = 0.5;
  int max_detections_per_image = 100;
};

struct OracleScore {
  std::array<std::optional<double>, 10> ap;
  std::optional<double> map_all;
};

OracleScore BruteForceScore(const CocoDataset& gt, const std::vector<Detection>& detections,
                            const OracleOptions& options);

// Pixel-enumeration IoU helpers, exposed for direct checks.
double OracleBoxIou(const BoundingBox& a, const BoundingBox& b);
double OracleMaskIou(const Rle& a, const Rle& b);

}  // namespace foodsynth::testing

#endif  // FOODSYNTH_TESTS_SUPPORT_BRUTE_FORCE_SCORER_H_
