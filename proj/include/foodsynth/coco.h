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
#ifndef FOODSYNTH_COCO_H_
#define FOODSYNTH_COCO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "foodsynth/mask.h"
#include "foodsynth/renderer.h"
#include "foodsynth/rle.h"
#include "foodsynth/scene.h"

namespace foodsynth {

inline constexpr int kFoodCategoryId = 1;

// Malformed or invariant-violating dataset / result files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ImageInfo {
  std::int64_t id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
  // Nonstandard field; empty when absent.
  std::string difficulty;

  friend bool operator==(const ImageInfo&, const ImageInfo&) = default;
};

struct CocoAnnotation {
  std::int64_t id = 0;
  std::int64_t image_id = 0;
  int category_id = kFoodCategoryId;
  Rle segmentation;
  BoundingBox bbox;
  std::int64_t area = 0;
  int iscrowd = 0;

  friend bool operator==(const CocoAnnotation&, const CocoAnnotation&) = default;
};

struct Category {
  int id = kFoodCategoryId;
  std::string name = "food";

  friend bool operator==(const Category&, const Category&) = default;
};

struct CocoDataset {
  std::vector<ImageInfo> images;
  std::vector<CocoAnnotation> annotations;
  std::vector<Category> categories{Category{}};

  friend bool operator==(const CocoDataset&, const CocoDataset&) = default;
};

struct Detection {
  std::int64_t image_id = 0;
  int category_id = kFoodCategoryId;
  double score = 0.0;
  // Absent in box-only result files.
  std::optional<Rle> segmentation;
  BoundingBox bbox;

  friend bool operator==(const Detection&, const Detection&) = default;
};

// Throws DataError naming the offending record. Checks id uniqueness,
// image references, RLE consistency with the image size, and that area and
// bbox match the decoded mask.
void ValidateDataset(const CocoDataset& dataset);

// Sorted keys, no insignificant whitespace, trailing newline.
std::string DatasetToJson(const CocoDataset& dataset);
// `source` names the input in error messages. Unknown fields are ignored.
CocoDataset DatasetFromJson(const std::string& text, const std::string& source = "<string>");
CocoDataset ReadDataset(const std::filesystem::path& path);
void WriteDatasetJson(const CocoDataset& dataset, const std::filesystem::path& path);

std::string ResultsToJson(const std::vector<Detection>& detections);
std::vector<Detection> ResultsFromJson(const std::string& text,
                                       const std::string& source = "<string>");
std::vector<Detection> ReadResults(const std::filesystem::path& path);
void WriteResults(const std::vector<Detection>& detections, const std::filesystem::path& path);

// GT converted to score-1 detections; used for self-evaluation.
std::vector<Detection> DetectionsFromGroundTruth(const CocoDataset& dataset);

// One rendered image with its extracted masks.
struct RenderedImage {
  Difficulty difficulty = Difficulty::kEasy;
  RenderOutput render;
  std::vector<InstanceMask> masks;
};

// "000042.png" for index 42.
std::string ImageFileName(std::size_t index);

// Writes images/NNNNNN.png (RGB) and masks/NNNNNN.png (16-bit id map) under
// `root` and returns the image entry with id index + 1.
ImageInfo WriteImageFiles(const std::filesystem::path& root, std::size_t index,
                          const RenderOutput& render, Difficulty difficulty);

// Annotations for one image; ids are left 0 for AssembleDataset to fill.
std::vector<CocoAnnotation> AnnotationsFromMasks(std::span<const InstanceMask> masks,
                                                 std::int64_t image_id);

// Concatenates per-image annotations in image order, numbering them from 1.
CocoDataset AssembleDataset(std::vector<ImageInfo> images,
                            std::vector<std::vector<CocoAnnotation>> per_image);

// Writes the full dataset tree and returns the path of annotations.json.
std::filesystem::path WriteDataset(std::span<const RenderedImage> records,
                                   const std::filesystem::path& output_dir);

}  // namespace foodsynth

#endif  // FOODSYNTH_COCO_H_
