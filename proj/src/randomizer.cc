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
#include "foodsynth/randomizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace foodsynth {

namespace {

constexpr double kMaxBackgroundChannelDark = 0.1;

Rgb RandomColor(Rng& rng, double lo = 0.0, double hi = 1.0) {
  const double r = rng.UniformReal(lo, hi);
  const double g = rng.UniformReal(lo, hi);
  const double b = rng.UniformReal(lo, hi);
  return {r, g, b};
}

TextureKind RandomTextureKind(Rng& rng) {
  return static_cast<TextureKind>(rng.UniformInt(0, 4));
}

Mat3 RandomRotation(Rng& rng) {
  const Vec3 axis = rng.UnitSphereDirection();
  const double angle = rng.UniformReal(0.0, 2 * kPi);
  return RotationAboutAxis(axis, angle);
}

Primitive SamplePrimitive(Rng& rng, const GenConfig& config) {
  Primitive p;
  p.kind = static_cast<PrimitiveKind>(rng.UniformInt(0, 3));
  const RealRange& he = config.primitive_half_extent;
  const double a = rng.UniformReal(he.min, he.max);
  const double b = rng.UniformReal(he.min, he.max);
  const double c = rng.UniformReal(he.min, he.max);
  p.half_extents = p.kind == PrimitiveKind::kSphere ? Vec3{a, a, a} : Vec3{a, b, c};
  p.local_transform.rotation = RandomRotation(rng);
  // Uniform in a ball of radius cluster_radius, squashed vertically so piles
  // spread across the well rather than stacking.
  const Vec3 dir = rng.UnitSphereDirection();
  const double radius = config.cluster_radius * std::cbrt(rng.Uniform01());
  p.local_transform.translation = {dir.x * radius, dir.y * radius, dir.z * radius * 0.5};
  return p;
}

}  // namespace

MealTray TrayFromConfig(const GenConfig& config) {
  MealTray tray;
  tray.outer_size = config.tray_outer_size;
  tray.height = config.tray_height;
  tray.wells.wells_per_row = config.wells_per_row;
  tray.wells.margin = config.well_margin;
  tray.wells.depth = config.well_depth;
  return tray;
}

double LowestPointBelowOrigin(const Primitive& p) {
  // World-up expressed in the primitive frame is the third row of R.
  const Vec3 u = p.local_transform.rotation.Row(2);
  const Vec3& h = p.half_extents;
  double support = 0.0;
  switch (p.kind) {
    case PrimitiveKind::kBox:
      support = std::abs(u.x) * h.x + std::abs(u.y) * h.y + std::abs(u.z) * h.z;
      break;
    case PrimitiveKind::kSphere:
      support = h.x;
      break;
    case PrimitiveKind::kEllipsoid:
      support = std::sqrt(u.x * u.x * h.x * h.x + u.y * u.y * h.y * h.y + u.z * u.z * h.z * h.z);
      break;
    case PrimitiveKind::kCylinder:
      support = std::abs(u.z) * h.z + std::sqrt(u.x * u.x * h.x * h.x + u.y * u.y * h.y * h.y);
      break;
  }
  return support - p.local_transform.translation.z;
}

Material SampleMaterial(Rng& rng, Difficulty difficulty, MaterialRole role) {
  Material m;
  if (role == MaterialRole::kBackground && difficulty != Difficulty::kHard) {
    m.texture = TextureKind::kSolid;
    m.base_color = RandomColor(rng, 0.0, kMaxBackgroundChannelDark);
    m.secondary_color = m.base_color;
    m.specular_strength =
        difficulty == Difficulty::kMedium ? rng.UniformReal(0.3, 0.8) : 0.0;
    return m;
  }
  m.texture = RandomTextureKind(rng);
  m.base_color = RandomColor(rng);
  m.secondary_color = RandomColor(rng);
  switch (role) {
    case MaterialRole::kBackground: m.scale = rng.UniformReal(0.02, 0.2); break;
    case MaterialRole::kTray: m.scale = rng.UniformReal(0.01, 0.06); break;
    case MaterialRole::kFood:
    case MaterialRole::kDistractor: m.scale = rng.UniformReal(0.004, 0.02); break;
  }
  m.noise_octaves = static_cast<int>(rng.UniformInt(1, 6));
  m.noise_seed = static_cast<std::uint32_t>(rng.NextU64() >> 32);
  m.specular_strength = rng.UniformReal(0.0, role == MaterialRole::kBackground ? 0.5 : 0.6);
  return m;
}

Cluster SampleCluster(Rng& rng, const GenConfig& config, const Vec3& base,
                      MaterialRole role, Difficulty difficulty) {
  Cluster c;
  const int n = static_cast<int>(
      rng.UniformInt(config.primitives_per_cluster.min, config.primitives_per_cluster.max));
  c.primitives.reserve(n);
  double lowest = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    c.primitives.push_back(SamplePrimitive(rng, config));
    lowest = std::max(lowest, LowestPointBelowOrigin(c.primitives.back()));
  }
  // Yaw only, so the vertical extent computed above is unchanged.
  c.transform.rotation = RotationZ(rng.UniformReal(0.0, 2 * kPi));
  c.transform.translation = {base.x, base.y, base.z + lowest};
  c.material = SampleMaterial(rng, difficulty, role);
  return c;
}

FoodObject SampleFoodCluster(Rng& rng, const GenConfig& config, const Vec3& well_center,
                             int instance_id) {
  FoodObject food;
  food.instance_id = instance_id;
  food.cluster = SampleCluster(rng, config, well_center, MaterialRole::kFood, Difficulty::kHard);
  return food;
}

std::vector<Light> SampleLights(Rng& rng, const GenConfig& config) {
  const Vec3 center{0.0, 0.0, config.tray_height};
  const int n =
      static_cast<int>(rng.UniformInt(config.light_count.min, config.light_count.max));
  std::vector<Light> lights;
  lights.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec3 dir = rng.UnitSphereDirection();
    dir.z = std::abs(dir.z);
    // Keep lights well above the horizon; bounded so a pathological stream
    // cannot spin forever.
    for (int attempt = 0; dir.z < 0.2 && attempt < 64; ++attempt) {
      dir = rng.UnitSphereDirection();
      dir.z = std::abs(dir.z);
    }
    if (dir.z < 0.2) dir = {0.0, 0.0, 1.0};
    Light light;
    light.position = center + dir * rng.UniformReal(config.light_distance.min,
                                                    config.light_distance.max);
    light.intensity = rng.UniformReal(config.light_intensity.min, config.light_intensity.max);
    light.color = RandomColor(rng, 0.8, 1.0);
    lights.push_back(light);
  }
  return lights;
}

Camera SampleCamera(Rng& rng, const GenConfig& config) {
  const Vec3 center{0.0, 0.0, config.tray_height};
  const double elevation = rng.UniformReal(config.camera_elevation.min, config.camera_elevation.max);
  const double azimuth = rng.UniformReal(config.camera_azimuth.min, config.camera_azimuth.max);
  const double distance = rng.UniformReal(config.camera_distance.min, config.camera_distance.max);
  const double fov = rng.UniformReal(config.camera_fov.min, config.camera_fov.max);
  const double jitter_r = config.look_at_jitter * std::sqrt(rng.Uniform01());
  const double jitter_a = rng.UniformReal(0.0, 2 * kPi);

  const double ce = std::cos(elevation);
  const double se = std::sin(elevation);
  const double ca = std::cos(azimuth);
  const double sa = std::sin(azimuth);
  Camera cam;
  cam.position = center + Vec3{ce * ca, ce * sa, se} * distance;
  cam.look_at = center + Vec3{jitter_r * std::cos(jitter_a), jitter_r * std::sin(jitter_a), 0.0};
  // Tangent to the viewing sphere, pointing away from the camera's ground
  // projection; well defined even when looking straight down.
  cam.up = Vec3{-se * ca, -se * sa, ce};
  cam.vertical_fov = fov;
  cam.width = config.image_width;
  cam.height = config.image_height;
  return cam;
}

Scene SampleScene(const GenConfig& config, std::uint64_t seed) {
  ValidateGenConfig(config);
  Rng master(seed);
  Rng scene_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kScene));
  Rng tray_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kTray));
  Rng food_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kFoods));
  Rng distractor_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kDistractors));
  Rng light_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kLights));
  Rng camera_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kCamera));
  Rng background_rng = master.Fork(static_cast<std::uint64_t>(SceneStream::kBackground));

  Scene scene;
  scene.seed = seed;
  switch (config.difficulty) {
    case DifficultySetting::kEasy: scene.difficulty = Difficulty::kEasy; break;
    case DifficultySetting::kMedium: scene.difficulty = Difficulty::kMedium; break;
    case DifficultySetting::kHard: scene.difficulty = Difficulty::kHard; break;
    case DifficultySetting::kMixed:
      scene.difficulty = static_cast<Difficulty>(scene_rng.UniformInt(0, 2));
      break;
  }

  scene.tray = TrayFromConfig(config);
  scene.tray.material = SampleMaterial(tray_rng, scene.difficulty, MaterialRole::kTray);

  // Foods: a shuffled pass over all wells, repeated while foods remain.
  const std::vector<WellFootprint> wells = WellFootprints(scene.tray);
  const int capacity = static_cast<int>(wells.size());
  std::vector<int> order(capacity);
  std::iota(order.begin(), order.end(), 0);
  for (int i = capacity - 1; i > 0; --i) {
    std::swap(order[i], order[food_rng.UniformInt(0, i)]);
  }
  const int food_count =
      static_cast<int>(food_rng.UniformInt(config.food_count.min, config.food_count.max));
  std::vector<int> per_well(capacity, 0);
  for (int i = 0; i < food_count; ++i) ++per_well[order[i % capacity]];
  const double floor_z = WellFloorHeight(scene.tray);
  for (int i = 0; i < food_count; ++i) {
    const int well_index = order[i % capacity];
    const int slot = i / capacity;
    const WellFootprint& well = wells[well_index];
    const int sharing = per_well[well_index];
    Vec3 center{well.center.x, well.center.y, floor_z};
    if (sharing > 1) {
      // Spread along the longer side of the well.
      const double offset = (static_cast<double>(slot) + 0.5) / sharing - 0.5;
      if (well.half_size.x >= well.half_size.y) {
        center.x += offset * well.half_size.x * 2 * 0.6;
      } else {
        center.y += offset * well.half_size.y * 2 * 0.6;
      }
    } else {
      const double j = 0.2 * std::min(well.half_size.x, well.half_size.y);
      center.x += food_rng.UniformReal(-j, j);
      center.y += food_rng.UniformReal(-j, j);
    }
    FoodObject food = SampleFoodCluster(food_rng, config, center, i + 1);
    food.well_index = well_index;
    scene.food_objects.push_back(std::move(food));
  }

  // Distractors: uniform by area in the annulus between the tray's
  // circumscribed circle and 1.5x its diagonal, resting on the ground.
  const double half_diagonal =
      0.5 * std::hypot(scene.tray.outer_size.x, scene.tray.outer_size.y);
  const double r_in = half_diagonal * 1.001;
  const double r_out = 3.0 * half_diagonal;
  const int distractor_count = static_cast<int>(
      distractor_rng.UniformInt(config.distractor_count.min, config.distractor_count.max));
  for (int i = 0; i < distractor_count; ++i) {
    const double angle = distractor_rng.UniformReal(0.0, 2 * kPi);
    const double r = std::sqrt(distractor_rng.UniformReal(r_in * r_in, r_out * r_out));
    const Vec3 base{r * std::cos(angle), r * std::sin(angle), 0.0};
    Distractor d;
    d.cluster = SampleCluster(distractor_rng, config, base, MaterialRole::kDistractor,
                              scene.difficulty);
    scene.distractors.push_back(std::move(d));
  }

  scene.lights = SampleLights(light_rng, config);
  scene.camera = SampleCamera(camera_rng, config);
  scene.background_material =
      SampleMaterial(background_rng, scene.difficulty, MaterialRole::kBackground);
  return scene;
}

}  // namespace foodsynth
