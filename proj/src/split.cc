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
#include "foodsynth/split.h"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "foodsynth/rng.h"

namespace foodsynth {

std::string_view ToString(SplitUnit unit) {
  return unit == SplitUnit::kPerInstance ? "per-instance" : "per-image";
}

SplitUnit ParseSplitUnit(std::string_view name) {
  if (name == "per-instance" || name == "per_instance") return SplitUnit::kPerInstance;
  if (name == "per-image" || name == "per_image") return SplitUnit::kPerImage;
  throw std::invalid_argument("unknown split unit '" + std::string(name) + "'");
}

DatasetSplit SplitDataset(const CocoDataset& dataset, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw std::invalid_argument("train_fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.images.size();
  if (n == 0) throw DataError("cannot split an empty dataset");

  std::map<std::int64_t, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(dataset.images[i].id, i);
  std::vector<std::size_t> instances(n, 0);
  for (const CocoAnnotation& a : dataset.annotations) {
    auto it = index_of.find(a.image_id);
    if (it == index_of.end()) {
      throw DataError("annotation " + std::to_string(a.id) + " references unknown image_id " +
                      std::to_string(a.image_id));
    }
    ++instances[it->second];
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[static_cast<std::size_t>(rng.UniformInt(0, static_cast<std::int64_t>(i)))]);
  }

  std::vector<bool> to_train(n, false);
  const double f = spec.train_fraction;
  if (spec.unit == SplitUnit::kPerImage) {
    const auto train_count = static_cast<std::size_t>(std::llround(f * static_cast<double>(n)));
    for (std::size_t k = 0; k < train_count && k < n; ++k) to_train[order[k]] = true;
  } else {
    const double total = static_cast<double>(dataset.annotations.size());
    const double target = f * total;
    double train_instances = 0.0;
    std::size_t seen_empty = 0, train_empty = 0;
    for (std::size_t i : order) {
      if (instances[i] == 0) {
        ++seen_empty;
        if (static_cast<double>(train_empty) < f * static_cast<double>(seen_empty) - 1e-12) {
          to_train[i] = true;
          ++train_empty;
        }
        continue;
      }
      const double with = train_instances + static_cast<double>(instances[i]);
      if (std::abs(with - target) < std::abs(train_instances - target)) {
        to_train[i] = true;
        train_instances = with;
      }
    }
  }

  DatasetSplit split;
  split.train.categories = dataset.categories;
  split.test.categories = dataset.categories;
  for (std::size_t i = 0; i < n; ++i) {
    (to_train[i] ? split.train : split.test).images.push_back(dataset.images[i]);
  }
  for (const CocoAnnotation& a : dataset.annotations) {
    (to_train[index_of.at(a.image_id)] ? split.train : split.test).annotations.push_back(a);
  }
  return split;
}

std::pair<std::filesystem::path, std::filesystem::path> WriteSplit(
    const DatasetSplit& split, const std::filesystem::path& dir, const std::string& stem) {
  const std::filesystem::path train = dir / (stem + "_train.json");
  const std::filesystem::path test = dir / (stem + "_test.json");
  WriteDatasetJson(split.train, train);
  WriteDatasetJson(split.test, test);
  return {train, test};
}

}  // namespace foodsynth
