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
#ifndef FOODSYNTH_SCENE_H_
#define FOODSYNTH_SCENE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foodsynth/math.h"

namespace foodsynth {

// Scene units are meters. World frame is z-up; the background plane is z = 0
// and the tray top sits at z = tray.height, centered on the origin.

enum class PrimitiveKind { kSphere, kBox, kCylinder, kEllipsoid };
enum class TextureKind { kSolid, kChecker, kStripes, kValueNoise, kBlended };
enum class Difficulty { kEasy, kMedium, kHard };

std::string_view ToString(PrimitiveKind kind);
std::string_view ToString(TextureKind kind);
std::string_view ToString(Difficulty difficulty);
// Throws std::invalid_argument on unknown names.
Difficulty ParseDifficulty(std::string_view name);

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Sphere radius is half_extents.x (all three components are kept equal).
// Cylinders are elliptic: radii (x, y), half height z, axis along local z.
struct Primitive {
  PrimitiveKind kind = PrimitiveKind::kSphere;
  Vec3 half_extents{0.01, 0.01, 0.01};
  RigidTransform local_transform;

  friend bool operator==(const Primitive&, const Primitive&) = default;
};

struct Material {
  Rgb base_color{0.5, 0.5, 0.5};
  TextureKind texture = TextureKind::kSolid;
  // Texture feature size in texture-space meters.
  double scale = 0.02;
  Rgb secondary_color;
  int noise_octaves = 1;
  std::uint32_t noise_seed = 0;
  double specular_strength = 0.0;

  friend bool operator==(const Material&, const Material&) = default;
};

// A rigid group of primitives sharing one material. Food objects and
// distractors have identical geometry; only food carries an instance id.
struct Cluster {
  std::vector<Primitive> primitives;
  RigidTransform transform;
  Material material;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct FoodObject {
  int instance_id = 1;
  Cluster cluster;
  std::optional<int> well_index;

  friend bool operator==(const FoodObject&, const FoodObject&) = default;
};

struct Distractor {
  Cluster cluster;

  friend bool operator==(const Distractor&, const Distractor&) = default;
};

// Wells are laid out in rows along y; row i holds wells_per_row[i] wells of
// equal width. `margin` separates wells from each other and from the rim.
struct WellLayout {
  std::vector<int> wells_per_row{2, 3};
  double margin = 0.02;
  double depth = 0.02;

  friend bool operator==(const WellLayout&, const WellLayout&) = default;
};

struct MealTray {
  Vec2 outer_size{0.40, 0.30};
  double height = 0.03;
  WellLayout wells;
  Material material;

  friend bool operator==(const MealTray&, const MealTray&) = default;
};

// Axis-aligned rectangle in the xy plane.
struct WellFootprint {
  Vec2 center;
  Vec2 half_size;
};

int WellCapacity(const MealTray& tray);
// Row-major order: row 0 (lowest y) first.
std::vector<WellFootprint> WellFootprints(const MealTray& tray);
double WellFloorHeight(const MealTray& tray);
Vec3 TrayCenter(const MealTray& tray);
bool InsideTrayFootprint(const MealTray& tray, const Vec3& p);

struct Light {
  Vec3 position{0, 0, 1};
  double intensity = 1.0;
  Rgb color{1, 1, 1};

  friend bool operator==(const Light&, const Light&) = default;
};

struct Camera {
  Vec3 position{0, 0, 1};
  Vec3 look_at;
  Vec3 up{0, 1, 0};
  double vertical_fov = 0.8;
  int width = 512;
  int height = 512;

  friend bool operator==(const Camera&, const Camera&) = default;
};

struct Scene {
  std::uint64_t seed = 0;
  MealTray tray;
  std::vector<FoodObject> food_objects;
  std::vector<Distractor> distractors;
  std::vector<Light> lights;
  Camera camera;
  Material background_material;
  Difficulty difficulty = Difficulty::kEasy;

  friend bool operator==(const Scene&, const Scene&) = default;
};

// Limits used by ValidateScene that are not structural invariants of the
// types themselves.
struct SceneLimits {
  double min_light_intensity = 0.0;
  double max_light_intensity = 1e9;
};

// Empty iff every invariant holds. Each entry names the offending field.
std::vector<std::string> ValidateScene(const Scene& scene,
                                       const SceneLimits& limits = {});

// Cluster transform composed with the primitive's local transform.
// Throws std::out_of_range for a bad index.
RigidTransform WorldTransform(const Cluster& cluster, std::size_t primitive_index);
RigidTransform WorldTransform(const FoodObject& object, std::size_t primitive_index);
RigidTransform WorldTransform(const Distractor& object, std::size_t primitive_index);

// Deterministic JSON: sorted keys, reals rounded to 9 significant digits.
std::string SceneToJson(const Scene& scene);

}  // namespace foodsynth

#endif  // FOODSYNTH_SCENE_H_
