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
#ifndef FOODSYNTH_SPLIT_H_
#define FOODSYNTH_SPLIT_H_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <utility>

#include "foodsynth/coco.h"

namespace foodsynth {

enum class SplitUnit { kPerInstance, kPerImage };

std::string_view ToString(SplitUnit unit);
// Accepts "per-instance"/"per_instance" and "per-image"/"per_image".
SplitUnit ParseSplitUnit(std::string_view name);

struct SplitSpec {
  double train_fraction = 0.7;
  SplitUnit unit = SplitUnit::kPerInstance;
  std::uint64_t seed = 0;
};

struct DatasetSplit {
  CocoDataset train;
  CocoDataset test;
};

// Whole images go to exactly one side. Images are visited in a seeded
// shuffle. kPerImage sends the first round(f * N) to train. kPerInstance
// sends an image to train iff that brings the train instance count strictly
// closer to f * total instances; images without instances follow the image
// fraction instead. Both sides keep the original record order and ids.
// Throws DataError for an empty dataset and std::invalid_argument for a
// fraction outside (0, 1).
DatasetSplit SplitDataset(const CocoDataset& dataset, const SplitSpec& spec);

// Writes <stem>_train.json and <stem>_test.json into `dir`.
std::pair<std::filesystem::path, std::filesystem::path> WriteSplit(
    const DatasetSplit& split, const std::filesystem::path& dir, const std::string& stem);

}  // namespace foodsynth

#endif  // FOODSYNTH_SPLIT_H_
