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
#ifndef FOODSYNTH_RANDOMIZER_H_
#define FOODSYNTH_RANDOMIZER_H_

#include <cstdint>
#include <vector>

#include "foodsynth/gen_config.h"
#include "foodsynth/rng.h"
#include "foodsynth/scene.h"

namespace foodsynth {

enum class MaterialRole { kTray, kFood, kDistractor, kBackground };

// Fork tags for the per-subsystem streams of one scene, in fork order.
// New subsystems must be appended.
enum class SceneStream : std::uint64_t {
  kScene = 0,
  kTray = 1,
  kFoods = 2,
  kDistractors = 3,
  kLights = 4,
  kCamera = 5,
  kBackground = 6,
};

// Builds the tray geometry described by `config` (material left default).
MealTray TrayFromConfig(const GenConfig& config);

// Pure function of (config, seed). Throws ConfigError for an invalid config.
Scene SampleScene(const GenConfig& config, std::uint64_t seed);

// Primitive offsets stay within config.cluster_radius of the cluster origin;
// the cluster origin sits horizontally at `base` and the lowest point of the
// cluster touches z = base.z.
Cluster SampleCluster(Rng& rng, const GenConfig& config, const Vec3& base,
                      MaterialRole role, Difficulty difficulty);

FoodObject SampleFoodCluster(Rng& rng, const GenConfig& config, const Vec3& well_center,
                             int instance_id = 1);

std::vector<Light> SampleLights(Rng& rng, const GenConfig& config);
Camera SampleCamera(Rng& rng, const GenConfig& config);
Material SampleMaterial(Rng& rng, Difficulty difficulty, MaterialRole role);

// Distance from the cluster-local origin down to the lowest point of the
// primitive (a non-negative number when the origin is inside the primitive).
double LowestPointBelowOrigin(const Primitive& primitive);

}  // namespace foodsynth

#endif  // FOODSYNTH_RANDOMIZER_H_
