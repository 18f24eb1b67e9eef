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
#include "foodsynth/eval.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace foodsynth {

namespace {

constexpr int kRecallPoints = 101;

const Rle& RequireMask(const Detection& d) {
  if (!d.segmentation) {
    throw DataError("detection for image " + std::to_string(d.image_id) +
                    " has no segmentation; mask IoU needs one");
  }
  return *d.segmentation;
}

// Indices of `scores` by descending score; ties keep input order.
std::vector<std::size_t> RankByScore(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

std::string ThresholdKey(double t) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", t);
  return buf;
}

}  // namespace

std::string_view ToString(IouType type) {
  return type == IouType::kMask ? "mask" : "bbox";
}

IouType ParseIouType(std::string_view name) {
  if (name == "mask" || name == "segm") return IouType::kMask;
  if (name == "bbox" || name == "box") return IouType::kBox;
  throw std::invalid_argument("unknown IoU type '" + std::string(name) + "'");
}

std::vector<double> DefaultIouThresholds() {
  std::vector<double> t;
  for (int k = 10; k <= 19; ++k) t.push_back(k / 20.0);
  return t;
}

void ValidateEvalConfig(const EvalConfig& config) {
  if (config.iou_thresholds.empty()) throw std::invalid_argument("iou_thresholds is empty");
  for (std::size_t i = 0; i < config.iou_thresholds.size(); ++i) {
    const double t = config.iou_thresholds[i];
    if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("iou thresholds must lie in (0, 1]");
    if (i > 0 && !(t > config.iou_thresholds[i - 1])) {
      throw std::invalid_argument("iou thresholds must be strictly increasing");
    }
  }
  if (!(config.nms_threshold > 0.0 && config.nms_threshold <= 1.0)) {
    throw std::invalid_argument("nms_threshold must lie in (0, 1]");
  }
  if (config.max_detections_per_image < 1) {
    throw std::invalid_argument("max_detections_per_image must be >= 1");
  }
}

double BoxIou(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double ih = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = iw * ih;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double MaskIou(const Rle& a, const Rle& b) {
  const std::int64_t inter = RleIntersectionArea(a, b);
  const std::int64_t uni = RleArea(a) + RleArea(b) - inter;
  return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

double MaskIou(const BinaryMask& a, const BinaryMask& b) {
  if (a.height != b.height || a.width != b.width) {
    throw RleError("mask size mismatch");
  }
  std::int64_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const bool x = a.data[i] != 0;
    const bool y = b.data[i] != 0;
    inter += (x && y) ? 1 : 0;
    uni += (x || y) ? 1 : 0;
  }
  return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

double Iou(const Detection& a, const Detection& b, IouType type) {
  if (type == IouType::kBox) return BoxIou(a.bbox, b.bbox);
  return MaskIou(RequireMask(a), RequireMask(b));
}

double Iou(const CocoAnnotation& gt, const Detection& detection, IouType type) {
  if (type == IouType::kBox) return BoxIou(gt.bbox, detection.bbox);
  return MaskIou(gt.segmentation, RequireMask(detection));
}

std::vector<std::size_t> NmsIndices(std::span<const Detection> detections, double threshold,
                                    IouType type) {
  std::vector<double> scores;
  scores.reserve(detections.size());
  for (const Detection& d : detections) scores.push_back(d.score);
  std::vector<std::size_t> kept;
  for (std::size_t i : RankByScore(scores)) {
    bool keep = true;
    for (std::size_t k : kept) {
      if (Iou(detections[i], detections[k], type) > threshold) {
        keep = false;
        break;
      }
    }
    if (keep) kept.push_back(i);
  }
  return kept;
}

std::vector<Detection> Nms(std::span<const Detection> detections, double threshold,
                           IouType type) {
  std::vector<Detection> out;
  for (std::size_t i : NmsIndices(detections, threshold, type)) out.push_back(detections[i]);
  return out;
}

MatchResult MatchDetections(const std::vector<std::vector<double>>& ious,
                            std::span<const double> scores, std::size_t gt_count,
                            double iou_threshold) {
  MatchResult result;
  result.gt_count = gt_count;
  std::vector<bool> taken(gt_count, false);
  for (std::size_t d : RankByScore(scores)) {
    MatchEntry entry;
    entry.detection_index = d;
    entry.score = scores[d];
    double best = -1.0;
    for (std::size_t g = 0; g < gt_count; ++g) {
      const double v = ious[d][g];
      entry.iou = std::max(entry.iou, v);
      if (taken[g] || v < iou_threshold || v <= best) continue;
      best = v;
      entry.gt_index = g;
    }
    if (entry.gt_index) {
      taken[*entry.gt_index] = true;
      entry.iou = best;
      ++result.true_positives;
    } else {
      ++result.false_positives;
    }
    result.entries.push_back(entry);
  }
  result.false_negatives = gt_count - result.true_positives;
  return result;
}

MatchResult MatchDetections(std::span<const CocoAnnotation> gts,
                            std::span<const Detection> detections, double iou_threshold,
                            IouType type) {
  std::vector<std::vector<double>> ious(detections.size(), std::vector<double>(gts.size()));
  std::vector<double> scores;
  for (std::size_t d = 0; d < detections.size(); ++d) {
    scores.push_back(detections[d].score);
    for (std::size_t g = 0; g < gts.size(); ++g) ious[d][g] = Iou(gts[g], detections[d], type);
  }
  return MatchDetections(ious, scores, gts.size(), iou_threshold);
}

std::optional<double> AveragePrecision(std::span<const MatchEntry> ranked, std::size_t gt_count,
                                       PrecisionRecallCurve* curve) {
  if (gt_count == 0 && ranked.empty()) return std::nullopt;
  if (gt_count == 0) return 0.0;

  const std::size_t n = ranked.size();
  std::vector<double> precision(n), recall(n);
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ranked[i].gt_index) {
      ++tp;
    } else {
      ++fp;
    }
    precision[i] = static_cast<double>(tp) / static_cast<double>(tp + fp);
    recall[i] = static_cast<double>(tp) / static_cast<double>(gt_count);
  }
  // Precision envelope: best precision at this recall or beyond.
  std::vector<double> envelope = precision;
  for (std::size_t i = n; i-- > 1;) envelope[i - 1] = std::max(envelope[i - 1], envelope[i]);

  std::vector<double> interpolated(kRecallPoints, 0.0);
  double sum = 0.0;
  for (int k = 0; k < kRecallPoints; ++k) {
    const double r = k / 100.0;
    const auto it = std::lower_bound(recall.begin(), recall.end(), r);
    if (it != recall.end()) interpolated[k] = envelope[it - recall.begin()];
    sum += interpolated[k];
  }
  if (curve) {
    curve->precision = std::move(precision);
    curve->recall = std::move(recall);
    curve->interpolated = std::move(interpolated);
  }
  return sum / kRecallPoints;
}

std::optional<double> AveragePrecision(const MatchResult& match, PrecisionRecallCurve* curve) {
  return AveragePrecision(match.entries, match.gt_count, curve);
}

EvalReport Evaluate(const CocoDataset& gt, std::span<const Detection> detections,
                    const EvalConfig& config) {
  ValidateEvalConfig(config);

  std::map<std::int64_t, std::size_t> image_index;
  for (std::size_t i = 0; i < gt.images.size(); ++i) image_index.emplace(gt.images[i].id, i);

  const std::size_t num_images = gt.images.size();
  std::vector<std::vector<const CocoAnnotation*>> gts_by_image(num_images);
  for (const CocoAnnotation& a : gt.annotations) {
    auto it = image_index.find(a.image_id);
    if (it == image_index.end()) {
      throw DataError("annotation " + std::to_string(a.id) + " references unknown image_id " +
                      std::to_string(a.image_id));
    }
    gts_by_image[it->second].push_back(&a);
  }

  const bool needs_masks = config.iou_type == IouType::kMask ||
                           (config.apply_nms && config.nms_iou_type == IouType::kMask);
  std::vector<std::vector<Detection>> dets_by_image(num_images);
  for (std::size_t i = 0; i < detections.size(); ++i) {
    const Detection& d = detections[i];
    auto it = image_index.find(d.image_id);
    if (it == image_index.end()) {
      throw DataError("detection " + std::to_string(i) + " references unknown image_id " +
                      std::to_string(d.image_id));
    }
    const ImageInfo& img = gt.images[it->second];
    if (needs_masks) {
      if (!d.segmentation) {
        throw DataError("detection " + std::to_string(i) + " has no segmentation");
      }
      if (d.segmentation->height != img.height || d.segmentation->width != img.width) {
        throw DataError("detection " + std::to_string(i) + " mask size " +
                        std::to_string(d.segmentation->height) + "x" +
                        std::to_string(d.segmentation->width) + " does not match image " +
                        std::to_string(img.id) + " (" + std::to_string(img.height) + "x" +
                        std::to_string(img.width) + ")");
      }
    }
    dets_by_image[it->second].push_back(d);
  }

  // Per image: NMS, truncation, IoU matrix.
  struct ImageWork {
    std::vector<double> scores;
    std::vector<std::vector<double>> ious;
    std::size_t gt_count = 0;
  };
  std::vector<ImageWork> work(num_images);
  std::size_t kept_total = 0;
  for (std::size_t i = 0; i < num_images; ++i) {
    std::vector<Detection>& dets = dets_by_image[i];
    std::vector<std::size_t> keep;
    if (config.apply_nms) {
      keep = NmsIndices(dets, config.nms_threshold, config.nms_iou_type);
    } else {
      std::vector<double> s;
      for (const Detection& d : dets) s.push_back(d.score);
      keep = RankByScore(s);
    }
    if (keep.size() > static_cast<std::size_t>(config.max_detections_per_image)) {
      keep.resize(config.max_detections_per_image);
    }
    ImageWork& w = work[i];
    w.gt_count = gts_by_image[i].size();
    for (std::size_t k : keep) {
      w.scores.push_back(dets[k].score);
      std::vector<double> row(w.gt_count);
      for (std::size_t g = 0; g < w.gt_count; ++g) {
        row[g] = Iou(*gts_by_image[i][g], dets[k], config.iou_type);
      }
      w.ious.push_back(std::move(row));
    }
    kept_total += keep.size();
  }

  EvalReport report;
  report.iou_type = config.iou_type;
  report.num_images = num_images;
  report.num_ground_truths = gt.annotations.size();
  report.num_input_detections = detections.size();
  report.num_detections = kept_total;

  double ap_sum = 0.0;
  std::size_t ap_defined = 0;
  for (double threshold : config.iou_thresholds) {
    // Concatenate in image order; every per-image list is already in rank
    // order, so a stable sort by score yields the documented tie rule.
    std::vector<MatchEntry> all;
    all.reserve(kept_total);
    ThresholdResult tr;
    tr.threshold = threshold;
    for (const ImageWork& w : work) {
      const MatchResult m = MatchDetections(w.ious, w.scores, w.gt_count, threshold);
      tr.true_positives += m.true_positives;
      tr.false_positives += m.false_positives;
      all.insert(all.end(), m.entries.begin(), m.entries.end());
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const MatchEntry& a, const MatchEntry& b) { return a.score > b.score; });
    tr.ap = AveragePrecision(all, report.num_ground_truths, &tr.curve);
    if (tr.ap) {
      ap_sum += *tr.ap;
      ++ap_defined;
    }
    report.per_threshold.push_back(std::move(tr));
  }
  if (ap_defined > 0) report.map_all = ap_sum / static_cast<double>(ap_defined);
  return report;
}

std::string ReportToJson(const EvalReport& report) {
  using nlohmann::json;
  json aps = json::object();
  for (const ThresholdResult& t : report.per_threshold) {
    aps[ThresholdKey(t.threshold)] = t.ap ? json(*t.ap) : json(nullptr);
  }
  json doc = {
      {"ap_per_threshold", aps},
      {"counts",
       {{"detections", report.num_detections},
        {"ground_truths", report.num_ground_truths},
        {"images", report.num_images},
        {"input_detections", report.num_input_detections}}},
      {"iou_type", ToString(report.iou_type)},
      {"map_all", report.map_all ? json(*report.map_all) : json(nullptr)},
  };
  return doc.dump(2);
}

std::string FormatReportTable(const EvalReport& report) {
  std::ostringstream out;
  char line[128];
  out << "IoU type: " << ToString(report.iou_type) << "\n";
  out << "  IoU    AP\n";
  for (const ThresholdResult& t : report.per_threshold) {
    if (t.ap) {
      std::snprintf(line, sizeof(line), "  %.2f   %.3f\n", t.threshold, *t.ap);
    } else {
      std::snprintf(line, sizeof(line), "  %.2f   n/a\n", t.threshold);
    }
    out << line;
  }
  if (report.map_all) {
    std::snprintf(line, sizeof(line), "  mAP@all  %.3f\n", *report.map_all);
  } else {
    std::snprintf(line, sizeof(line), "  mAP@all  n/a\n");
  }
  out << line;
  out << "  images " << report.num_images << ", ground truths " << report.num_ground_truths
      << ", detections " << report.num_detections << " (of " << report.num_input_detections
      << ")\n";
  return out.str();
}

}  // namespace foodsynth
