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
#ifndef FOODSYNTH_GENERATE_H_
#define FOODSYNTH_GENERATE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>

#include "foodsynth/coco.h"
#include "foodsynth/gen_config.h"

namespace foodsynth {

// Seed of scene `index` in a dataset generated from `base_seed`.
std::uint64_t SceneSeed(std::uint64_t base_seed, std::size_t index);

// Sample, render and extract masks for one scene.
RenderedImage GenerateImage(const GenConfig& config, std::uint64_t scene_seed);

struct GenerateOptions {
  GenConfig config;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  // Worker threads; output is identical for any value.
  int jobs = 1;
  // Called from the calling thread as images complete.
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct GenerateSummary {
  std::size_t images = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_difficulty;
  std::filesystem::path manifest;
};

// Writes images/, masks/ and annotations.json under out_dir.
GenerateSummary GenerateDataset(const GenerateOptions& options);

}  // namespace foodsynth

#endif  // FOODSYNTH_GENERATE_H_
