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
#include "foodsynth/scene.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace foodsynth {

namespace {

using nlohmann::json;

bool InUnitInterval(double v) { return v >= 0.0 && v <= 1.0; }

bool ValidColor(const Rgb& c) {
  return InUnitInterval(c.r) && InUnitInterval(c.g) && InUnitInterval(c.b);
}

class Violations {
 public:
  void Check(bool ok, std::string message) {
    if (!ok) list_.push_back(std::move(message));
  }
  std::vector<std::string> Take() { return std::move(list_); }

 private:
  std::vector<std::string> list_;
};

void CheckMaterial(const Material& m, const std::string& field, Violations& v) {
  v.Check(ValidColor(m.base_color), field + ".base_color outside [0,1]");
  v.Check(ValidColor(m.secondary_color), field + ".secondary_color outside [0,1]");
  v.Check(m.scale > 0.0, field + ".scale must be > 0");
  v.Check(m.noise_octaves >= 1 && m.noise_octaves <= 6,
          field + ".noise_octaves outside [1,6]");
  v.Check(InUnitInterval(m.specular_strength),
          field + ".specular_strength outside [0,1]");
}

void CheckCluster(const Cluster& c, const std::string& field, Violations& v) {
  v.Check(!c.primitives.empty() && c.primitives.size() <= 16,
          field + ".primitives length outside [1,16]");
  v.Check(IsProperRotation(c.transform.rotation, 1e-6),
          field + ".cluster_transform rotation is not a proper rotation");
  for (std::size_t i = 0; i < c.primitives.size(); ++i) {
    const Primitive& p = c.primitives[i];
    const std::string pf = field + ".primitives[" + std::to_string(i) + "]";
    v.Check(p.half_extents.x > 0 && p.half_extents.y > 0 && p.half_extents.z > 0,
            pf + ".half_extents must be strictly positive");
    v.Check(IsProperRotation(p.local_transform.rotation, 1e-6),
            pf + ".local_transform rotation is not a proper rotation");
  }
  CheckMaterial(c.material, field + ".material", v);
}

// Rounds to 9 significant digits so the serialized text is stable.
double Round9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

json ToJson(const Vec3& v) { return json::array({Round9(v.x), Round9(v.y), Round9(v.z)}); }
json ToJson(const Vec2& v) { return json::array({Round9(v.x), Round9(v.y)}); }
json ToJson(const Rgb& c) { return json::array({Round9(c.r), Round9(c.g), Round9(c.b)}); }

json ToJson(const RigidTransform& t) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(ToJson(t.rotation.Row(r)));
  return {{"rotation", rows}, {"translation", ToJson(t.translation)}};
}

json ToJson(const Material& m) {
  return {{"base_color", ToJson(m.base_color)},
          {"noise_octaves", m.noise_octaves},
          {"noise_seed", m.noise_seed},
          {"scale", Round9(m.scale)},
          {"secondary_color", ToJson(m.secondary_color)},
          {"specular_strength", Round9(m.specular_strength)},
          {"texture", ToString(m.texture)}};
}

json ToJson(const Cluster& c) {
  json prims = json::array();
  for (const Primitive& p : c.primitives) {
    prims.push_back({{"half_extents", ToJson(p.half_extents)},
                     {"kind", ToString(p.kind)},
                     {"local_transform", ToJson(p.local_transform)}});
  }
  return {{"cluster_transform", ToJson(c.transform)},
          {"material", ToJson(c.material)},
          {"primitives", prims}};
}

}  // namespace

std::string_view ToString(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::kSphere: return "sphere";
    case PrimitiveKind::kBox: return "box";
    case PrimitiveKind::kCylinder: return "cylinder";
    case PrimitiveKind::kEllipsoid: return "ellipsoid";
  }
  return "unknown";
}

std::string_view ToString(TextureKind kind) {
  switch (kind) {
    case TextureKind::kSolid: return "solid";
    case TextureKind::kChecker: return "checker";
    case TextureKind::kStripes: return "stripes";
    case TextureKind::kValueNoise: return "value_noise";
    case TextureKind::kBlended: return "blended";
  }
  return "unknown";
}

std::string_view ToString(Difficulty difficulty) {
  switch (difficulty) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
  }
  return "unknown";
}

Difficulty ParseDifficulty(std::string_view name) {
  if (name == "easy") return Difficulty::kEasy;
  if (name == "medium") return Difficulty::kMedium;
  if (name == "hard") return Difficulty::kHard;
  throw std::invalid_argument("unknown difficulty '" + std::string(name) + "'");
}

int WellCapacity(const MealTray& tray) {
  int total = 0;
  for (int n : tray.wells.wells_per_row) total += n;
  return total;
}

std::vector<WellFootprint> WellFootprints(const MealTray& tray) {
  std::vector<WellFootprint> wells;
  const auto& rows = tray.wells.wells_per_row;
  if (rows.empty()) return wells;
  const double margin = tray.wells.margin;
  const double row_count = static_cast<double>(rows.size());
  const double row_h = (tray.outer_size.y - margin * (row_count + 1)) / row_count;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = rows[i];
    if (n <= 0) continue;
    const double well_w = (tray.outer_size.x - margin * (n + 1)) / n;
    const double cy = -tray.outer_size.y / 2 + margin + row_h / 2 +
                      static_cast<double>(i) * (row_h + margin);
    for (int j = 0; j < n; ++j) {
      const double cx = -tray.outer_size.x / 2 + margin + well_w / 2 + j * (well_w + margin);
      wells.push_back({{cx, cy}, {well_w / 2, row_h / 2}});
    }
  }
  return wells;
}

double WellFloorHeight(const MealTray& tray) { return tray.height - tray.wells.depth; }

Vec3 TrayCenter(const MealTray& tray) { return {0.0, 0.0, tray.height}; }

bool InsideTrayFootprint(const MealTray& tray, const Vec3& p) {
  return std::abs(p.x) <= tray.outer_size.x / 2 && std::abs(p.y) <= tray.outer_size.y / 2;
}

std::vector<std::string> ValidateScene(const Scene& scene, const SceneLimits& limits) {
  Violations v;

  // Tray.
  const MealTray& tray = scene.tray;
  v.Check(tray.outer_size.x > 0 && tray.outer_size.y > 0,
          "tray.outer_size must be positive");
  v.Check(tray.height > 0, "tray.height must be positive");
  v.Check(tray.wells.depth > 0 && tray.wells.depth < tray.height,
          "tray.wells.depth must lie in (0, tray.height)");
  v.Check(tray.wells.margin >= 0, "tray.wells.margin must be non-negative");
  v.Check(!tray.wells.wells_per_row.empty(), "tray.wells has no rows");
  bool rows_ok = true;
  for (int n : tray.wells.wells_per_row) rows_ok = rows_ok && n >= 1;
  v.Check(rows_ok, "tray.wells.wells_per_row entries must be >= 1");
  const std::vector<WellFootprint> wells = WellFootprints(tray);
  bool wells_ok = rows_ok;
  for (const WellFootprint& w : wells) {
    wells_ok = wells_ok && w.half_size.x > 0 && w.half_size.y > 0 &&
               std::abs(w.center.x) + w.half_size.x <= tray.outer_size.x / 2 + 1e-12 &&
               std::abs(w.center.y) + w.half_size.y <= tray.outer_size.y / 2 + 1e-12;
  }
  for (std::size_t i = 0; wells_ok && i < wells.size(); ++i) {
    for (std::size_t j = i + 1; j < wells.size(); ++j) {
      const bool apart_x = std::abs(wells[i].center.x - wells[j].center.x) >=
                           wells[i].half_size.x + wells[j].half_size.x;
      const bool apart_y = std::abs(wells[i].center.y - wells[j].center.y) >=
                           wells[i].half_size.y + wells[j].half_size.y;
      wells_ok = wells_ok && (apart_x || apart_y);
    }
  }
  v.Check(wells_ok, "tray.wells footprints must be nonempty, disjoint and inside outer_size");
  CheckMaterial(tray.material, "tray.material", v);

  // Food.
  v.Check(!scene.food_objects.empty(), "food_objects must be nonempty");
  std::set<int> ids;
  std::set<int> occupied;
  bool ids_unique = true;
  for (std::size_t i = 0; i < scene.food_objects.size(); ++i) {
    const FoodObject& f = scene.food_objects[i];
    const std::string field = "food_objects[" + std::to_string(i) + "]";
    v.Check(f.instance_id >= 1, field + ".instance_id must be >= 1");
    ids_unique = ids.insert(f.instance_id).second && ids_unique;
    if (f.well_index) {
      v.Check(*f.well_index >= 0 && *f.well_index < WellCapacity(tray),
              field + ".well_index out of range");
      occupied.insert(*f.well_index);
    }
    CheckCluster(f.cluster, field, v);
  }
  v.Check(ids_unique, "food_objects instance_id values must be unique");
  v.Check(static_cast<int>(occupied.size()) <= WellCapacity(tray),
          "tray.wells capacity smaller than occupied wells");

  for (std::size_t i = 0; i < scene.distractors.size(); ++i) {
    const Distractor& d = scene.distractors[i];
    const std::string field = "distractors[" + std::to_string(i) + "]";
    v.Check(!InsideTrayFootprint(tray, d.cluster.transform.translation),
            field + " position lies inside the tray footprint");
    CheckCluster(d.cluster, field, v);
  }

  v.Check(!scene.lights.empty(), "lights must be nonempty");
  for (std::size_t i = 0; i < scene.lights.size(); ++i) {
    const Light& l = scene.lights[i];
    const std::string field = "lights[" + std::to_string(i) + "]";
    v.Check(l.intensity > 0 && l.intensity >= limits.min_light_intensity &&
                l.intensity <= limits.max_light_intensity,
            field + ".intensity outside configured range");
    v.Check(l.position.z > 0, field + ".position must be above the tray plane (z > 0)");
    v.Check(ValidColor(l.color), field + ".color outside [0,1]");
  }

  const Camera& cam = scene.camera;
  v.Check(cam.vertical_fov > 0 && cam.vertical_fov < kPi, "camera.vertical_fov outside (0, pi)");
  v.Check(cam.width >= 64 && cam.height >= 64, "camera.image_size must be at least 64x64");
  v.Check(Norm(cam.position - cam.look_at) > 0, "camera.position equals camera.look_at");
  v.Check(std::abs(Norm(cam.up) - 1.0) < 1e-6, "camera.up must be a unit vector");

  CheckMaterial(scene.background_material, "background_material", v);
  return v.Take();
}

RigidTransform WorldTransform(const Cluster& cluster, std::size_t primitive_index) {
  if (primitive_index >= cluster.primitives.size()) {
    throw std::out_of_range("primitive index " + std::to_string(primitive_index) +
                            " out of range for cluster of " +
                            std::to_string(cluster.primitives.size()));
  }
  return cluster.transform * cluster.primitives[primitive_index].local_transform;
}

RigidTransform WorldTransform(const FoodObject& object, std::size_t primitive_index) {
  return WorldTransform(object.cluster, primitive_index);
}

RigidTransform WorldTransform(const Distractor& object, std::size_t primitive_index) {
  return WorldTransform(object.cluster, primitive_index);
}

std::string SceneToJson(const Scene& scene) {
  json foods = json::array();
  for (const FoodObject& f : scene.food_objects) {
    json j = ToJson(f.cluster);
    j["instance_id"] = f.instance_id;
    j["well_index"] = f.well_index ? json(*f.well_index) : json(nullptr);
    foods.push_back(std::move(j));
  }
  json distractors = json::array();
  for (const Distractor& d : scene.distractors) distractors.push_back(ToJson(d.cluster));
  json lights = json::array();
  for (const Light& l : scene.lights) {
    lights.push_back({{"color", ToJson(l.color)},
                      {"intensity", Round9(l.intensity)},
                      {"position", ToJson(l.position)}});
  }
  const Camera& c = scene.camera;
  json doc = {
      {"background_material", ToJson(scene.background_material)},
      {"camera",
       {{"image_size", {c.width, c.height}},
        {"look_at", ToJson(c.look_at)},
        {"position", ToJson(c.position)},
        {"up", ToJson(c.up)},
        {"vertical_fov", Round9(c.vertical_fov)}}},
      {"difficulty", ToString(scene.difficulty)},
      {"distractors", distractors},
      {"food_objects", foods},
      {"lights", lights},
      {"seed", scene.seed},
      {"tray",
       {{"height", Round9(scene.tray.height)},
        {"material", ToJson(scene.tray.material)},
        {"outer_size", ToJson(scene.tray.outer_size)},
        {"wells",
         {{"depth", Round9(scene.tray.wells.depth)},
          {"margin", Round9(scene.tray.wells.margin)},
          {"wells_per_row", scene.tray.wells.wells_per_row}}}}},
  };
  return doc.dump(2);
}

}  // namespace foodsynth
