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
#include "foodsynth/stats.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

namespace foodsynth {

DatasetStats ComputeStats(const CocoDataset& dataset) {
  DatasetStats s;
  s.images = dataset.images.size();
  s.instances = dataset.annotations.size();
  std::map<std::int64_t, std::size_t> per_image;
  for (const ImageInfo& img : dataset.images) {
    per_image[img.id] = 0;
    ++s.per_difficulty[img.difficulty.empty() ? "unknown" : img.difficulty];
  }
  std::vector<double> areas;
  areas.reserve(dataset.annotations.size());
  for (const CocoAnnotation& a : dataset.annotations) {
    ++per_image[a.image_id];
    areas.push_back(static_cast<double>(a.area));
  }
  for (const auto& [id, count] : per_image) ++s.instances_per_image[count];
  if (!areas.empty()) {
    std::sort(areas.begin(), areas.end());
    const double qs[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int k = 0; k < 5; ++k) {
      const double pos = qs[k] * static_cast<double>(areas.size() - 1);
      const auto lo = static_cast<std::size_t>(std::floor(pos));
      const std::size_t hi = std::min(lo + 1, areas.size() - 1);
      s.area_quantiles[k] = areas[lo] + (areas[hi] - areas[lo]) * (pos - static_cast<double>(lo));
    }
  }
  return s;
}

std::string StatsToJson(const DatasetStats& s) {
  using nlohmann::json;
  json hist = json::object();
  for (const auto& [k, v] : s.instances_per_image) hist[std::to_string(k)] = v;
  json diff = json::object();
  for (const auto& [k, v] : s.per_difficulty) diff[k] = v;
  json doc = {{"images", s.images},
              {"instances", s.instances},
              {"instances_per_image", hist},
              {"per_difficulty", diff},
              {"mask_area_quantiles",
               {{"min", s.area_quantiles[0]},
                {"p25", s.area_quantiles[1]},
                {"median", s.area_quantiles[2]},
                {"p75", s.area_quantiles[3]},
                {"max", s.area_quantiles[4]}}}};
  return doc.dump(2);
}

}  // namespace foodsynth
