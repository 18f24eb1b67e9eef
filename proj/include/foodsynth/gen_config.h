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
#ifndef FOODSYNTH_GEN_CONFIG_H_
#define FOODSYNTH_GEN_CONFIG_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "foodsynth/math.h"
#include "foodsynth/scene.h"

namespace foodsynth {

struct IntRange {
  int min = 0;
  int max = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RealRange {
  double min = 0.0;
  double max = 0.0;
  friend bool operator==(const RealRange&, const RealRange&) = default;
};

enum class DifficultySetting { kEasy, kMedium, kHard, kMixed };

std::string_view ToString(DifficultySetting setting);
DifficultySetting ParseDifficultySetting(std::string_view name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every knob of the scene sampler. Angles in radians, lengths in meters.
struct GenConfig {
  IntRange food_count{3, 8};
  IntRange primitives_per_cluster{3, 12};
  IntRange distractor_count{0, 5};
  IntRange light_count{1, 4};
  RealRange light_intensity{0.4, 1.6};
  // Distance of each light from the tray center.
  RealRange light_distance{1.0, 2.0};
  RealRange camera_elevation{0.9, kPi / 2};
  RealRange camera_azimuth{0.0, 2 * kPi};
  RealRange camera_distance{0.55, 0.85};
  RealRange camera_fov{0.7, 0.9};
  double look_at_jitter = 0.02;
  DifficultySetting difficulty = DifficultySetting::kMixed;
  int image_width = 512;
  int image_height = 512;

  Vec2 tray_outer_size{0.40, 0.30};
  double tray_height = 0.03;
  std::vector<int> wells_per_row{2, 3};
  double well_margin = 0.02;
  double well_depth = 0.02;

  double cluster_radius = 0.04;
  RealRange primitive_half_extent{0.008, 0.022};
  // Foods fill distinct wells first; only counts above the well capacity
  // double up, up to this many per well.
  int max_foods_per_well = 2;

  int min_mask_pixels = 64;
  int subdivisions = 24;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

// Throws ConfigError naming the first bad field.
void ValidateGenConfig(const GenConfig& config);

// Missing keys keep their defaults; unknown keys are rejected.
GenConfig GenConfigFromJson(const std::string& text);
GenConfig LoadGenConfig(const std::filesystem::path& path);
std::string GenConfigToJson(const GenConfig& config);

}  // namespace foodsynth

#endif  // FOODSYNTH_GEN_CONFIG_H_
