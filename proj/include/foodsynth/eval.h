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
#ifndef FOODSYNTH_EVAL_H_
#define FOODSYNTH_EVAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foodsynth/coco.h"
#include "foodsynth/mask.h"
#include "foodsynth/rle.h"

namespace foodsynth {

enum class IouType { kMask, kBox };

std::string_view ToString(IouType type);
// Accepts "mask", "segm" and "bbox". Throws std::invalid_argument otherwise.
IouType ParseIouType(std::string_view name);

// 0.50, 0.55, ..., 0.95, each computed as k / 20.0 so that values such as
// 0.55 are the nearest doubles to the decimal.
std::vector<double> DefaultIouThresholds();

struct EvalConfig {
  IouType iou_type = IouType::kMask;
  std::vector<double> iou_thresholds = DefaultIouThresholds();
  bool apply_nms = true;
  double nms_threshold = 0.5;
  IouType nms_iou_type = IouType::kBox;
  int max_detections_per_image = 100;
};

// Throws std::invalid_argument.
void ValidateEvalConfig(const EvalConfig& config);

// Intersection over union; 0 when the union is empty.
double BoxIou(const BoundingBox& a, const BoundingBox& b);
// Throws RleError when sizes differ.
double MaskIou(const Rle& a, const Rle& b);
double MaskIou(const BinaryMask& a, const BinaryMask& b);
// Mask mode throws DataError when either side has no segmentation.
double Iou(const Detection& a, const Detection& b, IouType type);
double Iou(const CocoAnnotation& gt, const Detection& detection, IouType type);

// Greedy non-maximum suppression. Visits detections by descending score
// (ties by input order) and keeps one iff its IoU with every kept detection
// is <= threshold. Returns indices into `detections` in keep order.
std::vector<std::size_t> NmsIndices(std::span<const Detection> detections, double threshold,
                                    IouType type);
std::vector<Detection> Nms(std::span<const Detection> detections, double threshold,
                           IouType type);

struct MatchEntry {
  std::size_t detection_index = 0;
  double score = 0.0;
  // Index into the ground-truth list, or empty for a false positive.
  std::optional<std::size_t> gt_index;
  // IoU with the matched ground truth (best candidate IoU when unmatched).
  double iou = 0.0;
};

// Matching of one image's detections at one IoU threshold. Entries are in
// processing order (descending score, ties by input order).
struct MatchResult {
  std::vector<MatchEntry> entries;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t gt_count = 0;
};

// ious[d][g] is the IoU of detection d with ground truth g. Each detection, in
// descending score order, takes the unmatched ground truth of highest IoU
// (lowest index on ties) when that IoU is >= threshold.
MatchResult MatchDetections(const std::vector<std::vector<double>>& ious,
                            std::span<const double> scores, std::size_t gt_count,
                            double iou_threshold);
MatchResult MatchDetections(std::span<const CocoAnnotation> gts,
                            std::span<const Detection> detections, double iou_threshold,
                            IouType type);

struct PrecisionRecallCurve {
  // Cumulative values after each ranked detection.
  std::vector<double> precision;
  std::vector<double> recall;
  // Interpolated precision at recall k / 100 for k = 0..100.
  std::vector<double> interpolated;
};

// 101-point interpolated AP over detections already ranked across the whole
// dataset. Returns nullopt when there are neither ground truths nor
// detections (the threshold is then excluded from the mean).
std::optional<double> AveragePrecision(std::span<const MatchEntry> ranked, std::size_t gt_count,
                                       PrecisionRecallCurve* curve = nullptr);
std::optional<double> AveragePrecision(const MatchResult& match,
                                       PrecisionRecallCurve* curve = nullptr);

struct ThresholdResult {
  double threshold = 0.0;
  std::optional<double> ap;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  PrecisionRecallCurve curve;
};

struct EvalReport {
  IouType iou_type = IouType::kMask;
  std::vector<ThresholdResult> per_threshold;
  // Mean of the defined per-threshold APs; nullopt when none is defined.
  std::optional<double> map_all;
  std::size_t num_images = 0;
  std::size_t num_ground_truths = 0;
  // Detections in the input, and after NMS and per-image truncation.
  std::size_t num_input_detections = 0;
  std::size_t num_detections = 0;
};

// Per image: NMS, truncation to the top max_detections_per_image, IoU against
// the ground truth. Per threshold: greedy matching, then dataset-wide
// ranking by descending score (ties by image order in `gt`, then input
// order) and 101-point AP. Throws DataError for unknown image ids, missing
// masks, or mask sizes that disagree with the image.
EvalReport Evaluate(const CocoDataset& gt, std::span<const Detection> detections,
                    const EvalConfig& config);

// {"ap_per_threshold": {"0.50": ...}, "counts": {...}, "iou_type": ...,
//  "map_all": ...}; undefined values are null.
std::string ReportToJson(const EvalReport& report);
std::string FormatReportTable(const EvalReport& report);

}  // namespace foodsynth

#endif  // FOODSYNTH_EVAL_H_
