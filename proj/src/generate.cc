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
#include "foodsynth/generate.h"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "foodsynth/png_io.h"
#include "foodsynth/randomizer.h"
#include "foodsynth/renderer.h"
#include "foodsynth/rng.h"

namespace foodsynth {

std::uint64_t SceneSeed(std::uint64_t base_seed, std::size_t index) {
  return Mix64(base_seed ^ Mix64(static_cast<std::uint64_t>(index) + 1));
}

RenderedImage GenerateImage(const GenConfig& config, std::uint64_t scene_seed) {
  const Scene scene = SampleScene(config, scene_seed);
  RenderOptions options;
  options.subdivisions = config.subdivisions;
  RenderedImage image;
  image.difficulty = scene.difficulty;
  image.render = Render(scene, options);
  image.masks = ExtractMasks(image.render, config.min_mask_pixels);
  return image;
}

GenerateSummary GenerateDataset(const GenerateOptions& options) {
  ValidateGenConfig(options.config);
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir / "images", ec);
  if (!ec) std::filesystem::create_directories(options.out_dir / "masks", ec);
  if (ec) {
    throw IoError("cannot create output directory " + options.out_dir.string() + ": " +
                  ec.message());
  }

  const std::size_t total = options.count;
  std::vector<ImageInfo> infos(total);
  std::vector<std::vector<CocoAnnotation>> annotations(total);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::size_t done = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      try {
        const RenderedImage image = GenerateImage(options.config, SceneSeed(options.seed, i));
        infos[i] = WriteImageFiles(options.out_dir, i, image.render, image.difficulty);
        annotations[i] = AnnotationsFromMasks(image.masks, infos[i].id);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        ++done;
      }
      cv.notify_one();
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
  {
    std::unique_lock<std::mutex> lock(mu);
    std::size_t reported = 0;
    while (reported < total && !failure) {
      cv.wait(lock, [&] { return done > reported || failure; });
      if (failure) break;
      reported = done;
      if (options.progress) {
        lock.unlock();
        options.progress(reported, total);
        lock.lock();
      }
    }
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  CocoDataset dataset = AssembleDataset(std::move(infos), std::move(annotations));
  ValidateDataset(dataset);
  GenerateSummary summary;
  summary.manifest = options.out_dir / "annotations.json";
  WriteDatasetJson(dataset, summary.manifest);
  summary.images = dataset.images.size();
  summary.instances = dataset.annotations.size();
  for (const ImageInfo& img : dataset.images) ++summary.per_difficulty[img.difficulty];
  return summary;
}

}  // namespace foodsynth
