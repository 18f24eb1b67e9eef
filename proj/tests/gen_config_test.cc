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
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "foodsynth/gen_config.h"

namespace foodsynth {
namespace {

std::string ErrorOf(const GenConfig& c) {
  try {
    ValidateGenConfig(c);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(GenConfigTest, DefaultsAreValid) { EXPECT_EQ(ErrorOf(GenConfig{}), ""); }

TEST(GenConfigTest, InvertedRangeNamesField) {
  GenConfig c;
  c.food_count = {5, 4};
  EXPECT_NE(ErrorOf(c).find("food_count_range"), std::string::npos);
  c = GenConfig{};
  c.light_intensity = {2.0, 1.0};
  EXPECT_NE(ErrorOf(c).find("light_intensity_range"), std::string::npos);
}

TEST(GenConfigTest, InvariantsEnforced) {
  GenConfig c;
  c.food_count = {0, 3};
  EXPECT_NE(ErrorOf(c), "");
  c = GenConfig{};
  c.light_count = {0, 2};
  EXPECT_NE(ErrorOf(c), "");
  c = GenConfig{};
  c.camera_elevation = {0.0, 1.0};
  EXPECT_NE(ErrorOf(c).find("camera_elevation_range"), std::string::npos);
  c = GenConfig{};
  c.camera_elevation = {1.0, 1.6};
  EXPECT_NE(ErrorOf(c).find("camera_elevation_range"), std::string::npos);
  c = GenConfig{};
  c.image_width = 32;
  EXPECT_NE(ErrorOf(c).find("image_size"), std::string::npos);
  c = GenConfig{};
  c.max_foods_per_well = 1;
  EXPECT_NE(ErrorOf(c).find("food_count_range"), std::string::npos);
  c.food_count = {3, 5};
  EXPECT_EQ(ErrorOf(c), "");
}

TEST(GenConfigTest, JsonOverridesOnlyGivenFields) {
  const GenConfig c = GenConfigFromJson(R"({"food_count_range": [2, 4], "difficulty": "hard",
                                            "image_size": [128, 96]})");
  EXPECT_EQ(c.food_count, (IntRange{2, 4}));
  EXPECT_EQ(c.difficulty, DifficultySetting::kHard);
  EXPECT_EQ(c.image_width, 128);
  EXPECT_EQ(c.image_height, 96);
  EXPECT_EQ(c.light_count, GenConfig{}.light_count);
  EXPECT_EQ(GenConfigFromJson("{}"), GenConfig{});
}

TEST(GenConfigTest, JsonRoundTrip) {
  GenConfig c;
  c.wells_per_row = {3, 3};
  c.camera_fov = {0.5, 0.6};
  c.difficulty = DifficultySetting::kMedium;
  EXPECT_EQ(GenConfigFromJson(GenConfigToJson(c)), c);
}

TEST(GenConfigTest, BadJsonRejected) {
  EXPECT_THROW(GenConfigFromJson(R"({"food_count": [1, 2]})"), ConfigError);
  EXPECT_THROW(GenConfigFromJson(R"({"food_count_range": [3, 1]})"), ConfigError);
  EXPECT_THROW(GenConfigFromJson(R"({"difficulty": "brutal"})"), ConfigError);
  EXPECT_THROW(GenConfigFromJson(R"({"food_count_range": "many"})"), ConfigError);
  EXPECT_THROW(GenConfigFromJson("[1, 2"), ConfigError);
}

TEST(GenConfigTest, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "foodsynth_gen_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"distractor_count_range": [1, 1]})";
  }
  EXPECT_EQ(LoadGenConfig(path).distractor_count, (IntRange{1, 1}));
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(LoadGenConfig(path));
}

}  // namespace
}  // namespace foodsynth
