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
#include "foodsynth/gen_config.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace foodsynth {

namespace {

using nlohmann::json;

void RequireRange(bool ok, const char* field) {
  if (!ok) throw ConfigError(std::string(field) + ": range must satisfy min <= max");
}

template <typename Range>
void ReadRange(const json& j, const char* key, Range& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(std::string(key) + ": expected [min, max]");
  }
  out.min = v[0].get<decltype(out.min)>();
  out.max = v[1].get<decltype(out.max)>();
}

template <typename T>
void ReadValue(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

const char* const kKnownKeys[] = {
    "food_count_range",       "primitives_per_cluster_range", "distractor_count_range",
    "light_count_range",      "light_intensity_range",        "light_distance_range",
    "camera_elevation_range", "camera_azimuth_range",         "camera_distance_range",
    "camera_fov_range",       "look_at_jitter",               "difficulty",
    "image_size",             "tray_outer_size",              "tray_height",
    "wells_per_row",          "well_margin",                  "well_depth",
    "cluster_radius",         "primitive_half_extent_range",  "max_foods_per_well",
    "min_mask_pixels",        "subdivisions"};

}  // namespace

std::string_view ToString(DifficultySetting setting) {
  switch (setting) {
    case DifficultySetting::kEasy: return "easy";
    case DifficultySetting::kMedium: return "medium";
    case DifficultySetting::kHard: return "hard";
    case DifficultySetting::kMixed: return "mixed";
  }
  return "unknown";
}

DifficultySetting ParseDifficultySetting(std::string_view name) {
  if (name == "easy") return DifficultySetting::kEasy;
  if (name == "medium") return DifficultySetting::kMedium;
  if (name == "hard") return DifficultySetting::kHard;
  if (name == "mixed") return DifficultySetting::kMixed;
  throw ConfigError("difficulty: unknown value '" + std::string(name) + "'");
}

void ValidateGenConfig(const GenConfig& c) {
  RequireRange(c.food_count.min <= c.food_count.max, "food_count_range");
  RequireRange(c.primitives_per_cluster.min <= c.primitives_per_cluster.max,
               "primitives_per_cluster_range");
  RequireRange(c.distractor_count.min <= c.distractor_count.max, "distractor_count_range");
  RequireRange(c.light_count.min <= c.light_count.max, "light_count_range");
  RequireRange(c.light_intensity.min <= c.light_intensity.max, "light_intensity_range");
  RequireRange(c.light_distance.min <= c.light_distance.max, "light_distance_range");
  RequireRange(c.camera_elevation.min <= c.camera_elevation.max, "camera_elevation_range");
  RequireRange(c.camera_azimuth.min <= c.camera_azimuth.max, "camera_azimuth_range");
  RequireRange(c.camera_distance.min <= c.camera_distance.max, "camera_distance_range");
  RequireRange(c.camera_fov.min <= c.camera_fov.max, "camera_fov_range");
  RequireRange(c.primitive_half_extent.min <= c.primitive_half_extent.max,
               "primitive_half_extent_range");

  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
  };
  require(c.food_count.min >= 1, "food_count_range: min must be >= 1");
  require(c.light_count.min >= 1, "light_count_range: min must be >= 1");
  require(c.distractor_count.min >= 0, "distractor_count_range: min must be >= 0");
  require(c.primitives_per_cluster.min >= 1 && c.primitives_per_cluster.max <= 16,
          "primitives_per_cluster_range: must lie within [1, 16]");
  require(c.light_intensity.min > 0, "light_intensity_range: intensities must be > 0");
  require(c.light_distance.min > 0, "light_distance_range: distances must be > 0");
  require(c.camera_elevation.min > 0 && c.camera_elevation.max <= kPi / 2,
          "camera_elevation_range: must lie within (0, pi/2]");
  require(c.camera_distance.min > 0, "camera_distance_range: distances must be > 0");
  require(c.camera_fov.min > 0 && c.camera_fov.max < kPi,
          "camera_fov_range: must lie within (0, pi)");
  require(c.look_at_jitter >= 0 && c.look_at_jitter <= 0.05,
          "look_at_jitter: must lie within [0, 0.05]");
  require(c.image_width >= 64 && c.image_height >= 64, "image_size: must be at least 64x64");
  require(c.tray_outer_size.x > 0 && c.tray_outer_size.y > 0,
          "tray_outer_size: must be positive");
  require(c.tray_height > 0, "tray_height: must be positive");
  require(c.well_depth > 0 && c.well_depth < c.tray_height,
          "well_depth: must lie within (0, tray_height)");
  require(c.well_margin >= 0, "well_margin: must be non-negative");
  require(!c.wells_per_row.empty(), "wells_per_row: must be nonempty");
  int capacity = 0;
  for (int n : c.wells_per_row) {
    require(n >= 1, "wells_per_row: entries must be >= 1");
    require(c.tray_outer_size.x > c.well_margin * (n + 1),
            "wells_per_row: wells do not fit the tray width");
    capacity += n;
  }
  const double rows = static_cast<double>(c.wells_per_row.size());
  require(c.tray_outer_size.y > c.well_margin * (rows + 1),
          "wells_per_row: rows do not fit the tray depth");
  require(c.max_foods_per_well >= 1, "max_foods_per_well: must be >= 1");
  require(c.food_count.max <= capacity * c.max_foods_per_well,
          "food_count_range: max exceeds well capacity times max_foods_per_well");
  require(c.cluster_radius > 0, "cluster_radius: must be positive");
  require(c.primitive_half_extent.min > 0, "primitive_half_extent_range: must be positive");
  require(c.min_mask_pixels >= 1, "min_mask_pixels: must be >= 1");
  require(c.subdivisions >= 1, "subdivisions: must be >= 1");
}

GenConfig GenConfigFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }

  GenConfig c;
  try {
    ReadRange(j, "food_count_range", c.food_count);
    ReadRange(j, "primitives_per_cluster_range", c.primitives_per_cluster);
    ReadRange(j, "distractor_count_range", c.distractor_count);
    ReadRange(j, "light_count_range", c.light_count);
    ReadRange(j, "light_intensity_range", c.light_intensity);
    ReadRange(j, "light_distance_range", c.light_distance);
    ReadRange(j, "camera_elevation_range", c.camera_elevation);
    ReadRange(j, "camera_azimuth_range", c.camera_azimuth);
    ReadRange(j, "camera_distance_range", c.camera_distance);
    ReadRange(j, "camera_fov_range", c.camera_fov);
    ReadRange(j, "primitive_half_extent_range", c.primitive_half_extent);
    ReadValue(j, "look_at_jitter", c.look_at_jitter);
    if (j.contains("difficulty")) {
      c.difficulty = ParseDifficultySetting(j.at("difficulty").get<std::string>());
    }
    if (j.contains("image_size")) {
      const json& s = j.at("image_size");
      if (!s.is_array() || s.size() != 2) throw ConfigError("image_size: expected [width, height]");
      c.image_width = s[0].get<int>();
      c.image_height = s[1].get<int>();
    }
    if (j.contains("tray_outer_size")) {
      const json& s = j.at("tray_outer_size");
      if (!s.is_array() || s.size() != 2) throw ConfigError("tray_outer_size: expected [x, y]");
      c.tray_outer_size = {s[0].get<double>(), s[1].get<double>()};
    }
    ReadValue(j, "tray_height", c.tray_height);
    ReadValue(j, "wells_per_row", c.wells_per_row);
    ReadValue(j, "well_margin", c.well_margin);
    ReadValue(j, "well_depth", c.well_depth);
    ReadValue(j, "cluster_radius", c.cluster_radius);
    ReadValue(j, "max_foods_per_well", c.max_foods_per_well);
    ReadValue(j, "min_mask_pixels", c.min_mask_pixels);
    ReadValue(j, "subdivisions", c.subdivisions);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }
  ValidateGenConfig(c);
  return c;
}

GenConfig LoadGenConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return GenConfigFromJson(buffer.str());
}

std::string GenConfigToJson(const GenConfig& c) {
  auto range = [](const auto& r) { return json::array({r.min, r.max}); };
  json j = {
      {"food_count_range", range(c.food_count)},
      {"primitives_per_cluster_range", range(c.primitives_per_cluster)},
      {"distractor_count_range", range(c.distractor_count)},
      {"light_count_range", range(c.light_count)},
      {"light_intensity_range", range(c.light_intensity)},
      {"light_distance_range", range(c.light_distance)},
      {"camera_elevation_range", range(c.camera_elevation)},
      {"camera_azimuth_range", range(c.camera_azimuth)},
      {"camera_distance_range", range(c.camera_distance)},
      {"camera_fov_range", range(c.camera_fov)},
      {"primitive_half_extent_range", range(c.primitive_half_extent)},
      {"look_at_jitter", c.look_at_jitter},
      {"difficulty", ToString(c.difficulty)},
      {"image_size", {c.image_width, c.image_height}},
      {"tray_outer_size", {c.tray_outer_size.x, c.tray_outer_size.y}},
      {"tray_height", c.tray_height},
      {"wells_per_row", c.wells_per_row},
      {"well_margin", c.well_margin},
      {"well_depth", c.well_depth},
      {"cluster_radius", c.cluster_radius},
      {"max_foods_per_well", c.max_foods_per_well},
      {"min_mask_pixels", c.min_mask_pixels},
      {"subdivisions", c.subdivisions},
  };
  return j.dump(2);
}

}  // namespace foodsynth
