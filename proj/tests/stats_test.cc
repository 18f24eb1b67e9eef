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
#include <gtest/gtest.h>

#include "foodsynth/coco.h"
#include "foodsynth/gen_config.h"
#include "foodsynth/rle.h"
#include "foodsynth/stats.h"
#include "json.hpp"
#include "support/test_scenes.h"

namespace foodsynth {
namespace {

TEST(StatsTest, GeneratedSet) {
  GenConfig config;
  config.image_width = 96;
  config.image_height = 96;
  config.min_mask_pixels = 8;
  const CocoDataset ds = testing::GenerateInMemory(config, 5, 11);
  const DatasetStats s = ComputeStats(ds);
  EXPECT_EQ(s.images, 5u);
  EXPECT_EQ(s.instances, ds.annotations.size());
  std::size_t by_difficulty = 0;
  for (const auto& [name, n] : s.per_difficulty) by_difficulty += n;
  EXPECT_EQ(by_difficulty, 5u);
  std::size_t hist_images = 0, hist_instances = 0;
  for (const auto& [k, n] : s.instances_per_image) {
    hist_images += n;
    hist_instances += k * n;
  }
  EXPECT_EQ(hist_images, 5u);
  EXPECT_EQ(hist_instances, s.instances);
  for (std::size_t q = 1; q < 5; ++q) EXPECT_LE(s.area_quantiles[q - 1], s.area_quantiles[q]);
}

TEST(StatsTest, QuantilesInterpolate) {
  CocoDataset ds;
  ImageInfo info;
  info.id = 1;
  info.width = 10;
  info.height = 1;
  ds.images.push_back(info);
  for (int area : {1, 2, 3, 4, 5}) {
    BinaryMask m(1, 10);
    for (int x = 0; x < area; ++x) m.set(0, x);
    CocoAnnotation a;
    a.id = area;
    a.image_id = 1;
    a.segmentation = EncodeRle(m);
    a.area = area;
    a.bbox = MaskBox(m);
    ds.annotations.push_back(a);
  }
  const DatasetStats s = ComputeStats(ds);
  EXPECT_EQ(s.area_quantiles[0], 1.0);
  EXPECT_EQ(s.area_quantiles[1], 2.0);
  EXPECT_EQ(s.area_quantiles[2], 3.0);
  EXPECT_EQ(s.area_quantiles[4], 5.0);
  EXPECT_EQ(s.per_difficulty.at("unknown"), 1u);
  const auto j = nlohmann::json::parse(StatsToJson(s));
  EXPECT_EQ(j["images"], 1);
  EXPECT_EQ(j["instances"], 5);
  EXPECT_EQ(j["mask_area_quantiles"]["median"], 3.0);
  EXPECT_EQ(j["instances_per_image"]["5"], 1);
}

TEST(StatsTest, EmptyDataset) {
  const DatasetStats s = ComputeStats(CocoDataset{});
  EXPECT_EQ(s.images, 0u);
  EXPECT_EQ(s.instances, 0u);
  EXPECT_NO_THROW(StatsToJson(s));
}

}  // namespace
}  // namespace foodsynth
