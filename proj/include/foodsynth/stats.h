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
#ifndef FOODSYNTH_STATS_H_
#define FOODSYNTH_STATS_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "foodsynth/coco.h"

namespace foodsynth {

struct DatasetStats {
  std::size_t images = 0;
  std::size_t instances = 0;
  // instances per image -> number of images with that many.
  std::map<std::size_t, std::size_t> instances_per_image;
  // Difficulty tag -> image count; untagged images count under "unknown".
  std::map<std::string, std::size_t> per_difficulty;
  // Mask area at quantiles 0, 0.25, 0.5, 0.75, 1 (linear interpolation);
  // all zero when there are no instances.
  std::array<double, 5> area_quantiles{};
};

DatasetStats ComputeStats(const CocoDataset& dataset);
std::string StatsToJson(const DatasetStats& stats);

}  // namespace foodsynth

#endif  // FOODSYNTH_STATS_H_
