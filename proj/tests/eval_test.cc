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
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "foodsynth/coco.h"
#include "foodsynth/eval.h"
#include "foodsynth/rle.h"
#include "foodsynth/rng.h"
#include "json.hpp"
#include "support/brute_force_scorer.h"
#include "support/test_scenes.h"

namespace foodsynth {
namespace {

using testing::BruteForceScore;
using testing::OracleOptions;

Detection BoxDetection(double score, BoundingBox box, std::int64_t image_id = 1) {
  Detection d;
  d.image_id = image_id;
  d.score = score;
  d.bbox = box;
  return d;
}

// Straightforward AP: for each recall point take the best precision among
// ranks whose recall reaches it.
double LoopAp(const std::vector<bool>& tp_by_rank, std::size_t gt_count) {
  double sum = 0.0;
  for (int k = 0; k <= 100; ++k) {
    double best = 0.0;
    std::size_t tp = 0;
    for (std::size_t i = 0; i < tp_by_rank.size(); ++i) {
      tp += tp_by_rank[i] ? 1 : 0;
      const double recall = static_cast<double>(tp) / gt_count;
      const double precision = static_cast<double>(tp) / (i + 1);
      if (recall >= k / 100.0) best = std::max(best, precision);
    }
    sum += best;
  }
  return sum / 101.0;
}

TEST(IouTest, BoxExample) {
  EXPECT_NEAR(BoxIou({0, 0, 2, 2}, {1, 0, 2, 2}), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(BoxIou({0, 0, 2, 2}, {1, 0, 2, 2}), testing::OracleBoxIou({0, 0, 2, 2}, {1, 0, 2, 2}));
  EXPECT_EQ(BoxIou({0, 0, 2, 2}, {5, 5, 1, 1}), 0.0);
  EXPECT_EQ(BoxIou({0, 0, 0, 0}, {0, 0, 0, 0}), 0.0);
}

TEST(IouTest, MaskBasics) {
  BinaryMask a(4, 4), b(4, 4);
  a.set(0, 0);
  a.set(1, 1);
  b.set(2, 2);
  EXPECT_EQ(MaskIou(EncodeRle(a), EncodeRle(a)), 1.0);
  EXPECT_EQ(MaskIou(EncodeRle(a), EncodeRle(b)), 0.0);
  EXPECT_EQ(MaskIou(EncodeRle(BinaryMask(4, 4)), EncodeRle(BinaryMask(4, 4))), 0.0);
  EXPECT_THROW(MaskIou(EncodeRle(a), EncodeRle(BinaryMask(4, 5))), RleError);
}

TEST(IouTest, SymmetricBoundedAndMatchesPixelCount) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int h = static_cast<int>(rng.UniformInt(1, 12));
    const int w = static_cast<int>(rng.UniformInt(1, 12));
    const BinaryMask a = testing::RandomMask(rng, h, w);
    const BinaryMask b = testing::RandomMask(rng, h, w);
    const Rle ra = EncodeRle(a), rb = EncodeRle(b);
    const double iou = MaskIou(ra, rb);
    EXPECT_EQ(iou, MaskIou(rb, ra));
    EXPECT_GE(iou, 0.0);
    EXPECT_LE(iou, 1.0);
    EXPECT_EQ(iou, MaskIou(a, b));
    EXPECT_EQ(iou, testing::OracleMaskIou(ra, rb));
    if (MaskArea(a) > 0) EXPECT_EQ(MaskIou(ra, ra), 1.0);
    const BoundingBox ba{static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5))};
    const BoundingBox bb{static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5)),
                         static_cast<double>(rng.UniformInt(0, 5))};
    EXPECT_EQ(BoxIou(ba, bb), testing::OracleBoxIou(ba, bb));
    EXPECT_EQ(BoxIou(ba, bb), BoxIou(bb, ba));
  }
}

TEST(NmsTest, SuppressesOverlapAboveThreshold) {
  // IoU(A, B) = 60 / 100.
  const std::vector<Detection> dets = {BoxDetection(0.8, {0, 0, 10, 6}),
                                       BoxDetection(0.9, {0, 0, 10, 10})};
  ASSERT_NEAR(BoxIou(dets[0].bbox, dets[1].bbox), 0.6, 1e-15);
  EXPECT_EQ(NmsIndices(dets, 0.5, IouType::kBox), (std::vector<std::size_t>{1}));
}

TEST(NmsTest, KeepsDisjointAndSingle) {
  const std::vector<Detection> dets = {BoxDetection(0.3, {0, 0, 2, 2}),
                                       BoxDetection(0.7, {5, 5, 2, 2})};
  EXPECT_EQ(NmsIndices(dets, 0.5, IouType::kBox), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(Nms(std::vector<Detection>{dets[0]}, 0.5, IouType::kBox).size(), 1u);
}

TEST(NmsTest, TiesKeepInputOrderAndEqualityIsKept) {
  // Equal scores: the earlier one wins. IoU exactly 0.5 is kept.
  const std::vector<Detection> dets = {BoxDetection(0.5, {0, 0, 4, 4}),
                                       BoxDetection(0.5, {0, 0, 4, 4}),
                                       BoxDetection(0.5, {0, 0, 4, 2})};
  EXPECT_EQ(NmsIndices(dets, 0.5, IouType::kBox), (std::vector<std::size_t>{0, 2}));
}

TEST(NmsTest, PropertiesOnRandomSets) {
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    std::vector<Detection> dets;
    const int n = static_cast<int>(rng.UniformInt(0, 8));
    for (int k = 0; k < n; ++k) {
      dets.push_back(BoxDetection(rng.UniformInt(0, 4) / 4.0,
                                  {static_cast<double>(rng.UniformInt(0, 6)),
                                   static_cast<double>(rng.UniformInt(0, 6)),
                                   static_cast<double>(rng.UniformInt(1, 6)),
                                   static_cast<double>(rng.UniformInt(1, 6))}));
    }
    const std::vector<Detection> kept = Nms(dets, 0.5, IouType::kBox);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        EXPECT_LE(BoxIou(kept[a].bbox, kept[b].bbox), 0.5);
      }
      EXPECT_NE(std::find(dets.begin(), dets.end(), kept[a]), dets.end());
    }
    EXPECT_EQ(Nms(kept, 0.5, IouType::kBox), kept);
  }
}

TEST(MatchTest, Examples) {
  const std::vector<double> one_score = {0.9};
  MatchResult m = MatchDetections({{0.6}}, one_score, 1, 0.5);
  EXPECT_EQ(m.true_positives, 1u);
  EXPECT_EQ(m.false_positives, 0u);
  EXPECT_EQ(m.false_negatives, 0u);

  const std::vector<double> two_scores = {0.9, 0.8};
  m = MatchDetections({{0.7}, {0.6}}, two_scores, 1, 0.5);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].gt_index, 0u);
  EXPECT_FALSE(m.entries[1].gt_index.has_value());
  EXPECT_EQ(m.true_positives, 1u);
  EXPECT_EQ(m.false_positives, 1u);

  m = MatchDetections({{0.4}}, one_score, 1, 0.5);
  EXPECT_EQ(m.false_positives, 1u);
  EXPECT_EQ(m.false_negatives, 1u);
}

TEST(MatchTest, ProcessesByScoreAndPrefersHighestIou) {
  // Lower-scored detection listed first; the higher one takes GT 1 (IoU .9)
  // and the other falls back to GT 0.
  const std::vector<double> scores = {0.2, 0.8};
  const MatchResult m = MatchDetections({{0.6, 0.7}, {0.55, 0.9}}, scores, 2, 0.5);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].detection_index, 1u);
  EXPECT_EQ(m.entries[0].gt_index, 1u);
  EXPECT_EQ(m.entries[1].detection_index, 0u);
  EXPECT_EQ(m.entries[1].gt_index, 0u);
  EXPECT_EQ(m.true_positives + m.false_positives, 2u);
  // Equal IoU: lowest GT index.
  const std::vector<double> one = {1.0};
  EXPECT_EQ(MatchDetections({{0.7, 0.7}}, one, 2, 0.5).entries[0].gt_index, 0u);
}

TEST(ApTest, Examples) {
  std::vector<MatchEntry> all_tp = {{0, 0.9, 0, 1.0}, {1, 0.8, 1, 1.0}};
  EXPECT_EQ(AveragePrecision(all_tp, 2), 1.0);

  std::vector<MatchEntry> no_tp = {{0, 0.9, std::nullopt, 0.0}};
  EXPECT_EQ(AveragePrecision(no_tp, 3), 0.0);

  std::vector<MatchEntry> half = {{0, 0.9, 0, 0.8}, {1, 0.8, std::nullopt, 0.1}};
  PrecisionRecallCurve curve;
  const auto ap = AveragePrecision(half, 2, &curve);
  ASSERT_TRUE(ap.has_value());
  EXPECT_NEAR(*ap, 51.0 / 101.0, 1e-15);
  EXPECT_EQ(*ap, LoopAp({true, false}, 2));
  ASSERT_EQ(curve.interpolated.size(), 101u);
  EXPECT_EQ(curve.interpolated[50], 1.0);
  EXPECT_EQ(curve.interpolated[51], 0.0);

  EXPECT_EQ(AveragePrecision(no_tp, 0), 0.0);
  EXPECT_FALSE(AveragePrecision(std::vector<MatchEntry>{}, 0).has_value());
}

TEST(ApTest, MatchesLoopOracleOnRandomRankings) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t gt = rng.UniformInt(1, 6);
    std::vector<bool> tps;
    std::vector<MatchEntry> ranked;
    std::size_t used = 0;
    const int n = static_cast<int>(rng.UniformInt(0, 8));
    for (int k = 0; k < n; ++k) {
      const bool tp = used < gt && rng.UniformInt(0, 1) == 1;
      used += tp ? 1 : 0;
      tps.push_back(tp);
      ranked.push_back({static_cast<std::size_t>(k), 1.0 - k * 0.1,
                        tp ? std::optional<std::size_t>(used - 1) : std::nullopt, 0.0});
    }
    EXPECT_EQ(*AveragePrecision(ranked, gt), LoopAp(tps, gt));
  }
}

class EvaluateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ImageInfo info;
    info.id = 1;
    info.width = 20;
    info.height = 20;
    gt_.images.push_back(info);
    for (int k = 0; k < 2; ++k) {
      BinaryMask m(20, 20);
      for (int y = 2; y < 8; ++y) {
        for (int x = 2 + 10 * k; x < 8 + 10 * k; ++x) m.set(y, x);
      }
      CocoAnnotation a;
      a.id = k + 1;
      a.image_id = 1;
      a.segmentation = EncodeRle(m);
      a.area = MaskArea(m);
      a.bbox = MaskBox(m);
      gt_.annotations.push_back(a);
    }
  }
  CocoDataset gt_;
};

TEST_F(EvaluateTest, PerfectDetectionsScoreOne) {
  for (IouType type : {IouType::kMask, IouType::kBox}) {
    EvalConfig config;
    config.iou_type = type;
    const EvalReport r = Evaluate(gt_, DetectionsFromGroundTruth(gt_), config);
    EXPECT_EQ(r.map_all, 1.0);
    EXPECT_EQ(r.num_images, 1u);
    EXPECT_EQ(r.num_ground_truths, 2u);
    EXPECT_NE(FormatReportTable(r).find("mAP@all  1.000"), std::string::npos);
  }
}

TEST_F(EvaluateTest, NoDetectionsScoreZero) {
  const EvalReport r = Evaluate(gt_, std::vector<Detection>{}, EvalConfig{});
  EXPECT_EQ(r.map_all, 0.0);
}

TEST_F(EvaluateTest, MapIsMeanOfThresholds) {
  std::vector<Detection> dets = DetectionsFromGroundTruth(gt_);
  BinaryMask shrunk = DecodeRle(*dets[0].segmentation);
  for (int x = 2; x < 8; ++x) shrunk.set(2, x, false);
  for (int x = 2; x < 8; ++x) shrunk.set(3, x, false);
  dets[0].segmentation = EncodeRle(shrunk);
  dets[0].score = 0.4;
  const EvalReport r = Evaluate(gt_, dets, EvalConfig{});
  double sum = 0.0;
  for (const auto& t : r.per_threshold) sum += *t.ap;
  EXPECT_NEAR(*r.map_all, sum / 10.0, 1e-12);
  EXPECT_GT(*r.map_all, 0.0);
  EXPECT_LT(*r.map_all, 1.0);
}

TEST_F(EvaluateTest, Errors) {
  std::vector<Detection> dets = DetectionsFromGroundTruth(gt_);
  dets[0].image_id = 99;
  EXPECT_THROW(Evaluate(gt_, dets, EvalConfig{}), DataError);

  dets = DetectionsFromGroundTruth(gt_);
  dets[0].segmentation = EncodeRle(BinaryMask(10, 10));
  EXPECT_THROW(Evaluate(gt_, dets, EvalConfig{}), DataError);

  dets = DetectionsFromGroundTruth(gt_);
  dets[0].segmentation.reset();
  EXPECT_THROW(Evaluate(gt_, dets, EvalConfig{}), DataError);
  EvalConfig box;
  box.iou_type = IouType::kBox;
  EXPECT_NO_THROW(Evaluate(gt_, dets, box));

  EvalConfig bad;
  bad.iou_thresholds = {0.5, 0.5};
  EXPECT_THROW(Evaluate(gt_, DetectionsFromGroundTruth(gt_), bad), std::invalid_argument);
}

TEST_F(EvaluateTest, TruncatesPerImage) {
  std::vector<Detection> dets = DetectionsFromGroundTruth(gt_);
  dets.push_back(BoxDetection(0.1, {15, 15, 2, 2}));
  dets.back().segmentation = EncodeRle(BinaryMask(20, 20));
  EvalConfig config;
  config.max_detections_per_image = 2;
  const EvalReport r = Evaluate(gt_, dets, config);
  EXPECT_EQ(r.num_input_detections, 3u);
  EXPECT_EQ(r.num_detections, 2u);
}

TEST_F(EvaluateTest, ReportJson) {
  const EvalReport r = Evaluate(gt_, DetectionsFromGroundTruth(gt_), EvalConfig{});
  const auto j = nlohmann::json::parse(ReportToJson(r));
  EXPECT_EQ(j["iou_type"], "mask");
  EXPECT_EQ(j["map_all"], 1.0);
  EXPECT_EQ(j["ap_per_threshold"].size(), 10u);
  EXPECT_EQ(j["ap_per_threshold"]["0.50"], 1.0);
  EXPECT_EQ(j["ap_per_threshold"]["0.95"], 1.0);
  EXPECT_EQ(j["counts"]["ground_truths"], 2);
  EXPECT_EQ(j["counts"]["images"], 1);

  CocoDataset empty;
  empty.images = gt_.images;
  const auto none = nlohmann::json::parse(ReportToJson(Evaluate(empty, {}, EvalConfig{})));
  EXPECT_TRUE(none["map_all"].is_null());
}

TEST(EvaluateOracleTest, MatchesBruteForceWithAndWithoutNms) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::MicroCase c = testing::RandomMicroCase(rng);
    for (IouType type : {IouType::kMask, IouType::kBox}) {
      for (bool nms : {true, false}) {
        EvalConfig config;
        config.iou_type = type;
        config.apply_nms = nms;
        OracleOptions options;
        options.mask_iou = type == IouType::kMask;
        options.apply_nms = nms;
        const EvalReport r = Evaluate(c.gt, c.detections, config);
        const auto o = BruteForceScore(c.gt, c.detections, options);
        ASSERT_EQ(r.map_all, o.map_all) << "trial " << trial;
        for (std::size_t t = 0; t < 10; ++t) ASSERT_EQ(r.per_threshold[t].ap, o.ap[t]);
      }
    }
  }
}

TEST(EvaluateOracleTest, RemovingFalsePositiveNeverLowersAp) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    testing::MicroCase c = testing::RandomMicroCase(rng);
    EvalConfig config;
    config.apply_nms = false;
    const EvalReport before = Evaluate(c.gt, c.detections, config);
    for (std::size_t t = 0; t < config.iou_thresholds.size(); ++t) {
      for (std::size_t p = 0; p < c.gt.images.size(); ++p) {
        std::vector<CocoAnnotation> gts;
        std::vector<Detection> dets;
        std::vector<std::size_t> where;
        for (const auto& a : c.gt.annotations) {
          if (a.image_id == c.gt.images[p].id) gts.push_back(a);
        }
        for (std::size_t k = 0; k < c.detections.size(); ++k) {
          if (c.detections[k].image_id == c.gt.images[p].id) {
            dets.push_back(c.detections[k]);
            where.push_back(k);
          }
        }
        const MatchResult m =
            MatchDetections(gts, dets, config.iou_thresholds[t], config.iou_type);
        for (const MatchEntry& e : m.entries) {
          if (e.gt_index) continue;
          std::vector<Detection> fewer = c.detections;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(where[e.detection_index]));
          const EvalReport after = Evaluate(c.gt, fewer, config);
          if (before.per_threshold[t].ap && after.per_threshold[t].ap) {
            EXPECT_GE(*after.per_threshold[t].ap, *before.per_threshold[t].ap - 1e-15);
          }
        }
      }
    }
  }
}

TEST(IouTypeTest, Parse) {
  EXPECT_EQ(ParseIouType("mask"), IouType::kMask);
  EXPECT_EQ(ParseIouType("segm"), IouType::kMask);
  EXPECT_EQ(ParseIouType("bbox"), IouType::kBox);
  EXPECT_THROW(ParseIouType("keypoints"), std::invalid_argument);
  const auto t = DefaultIouThresholds();
  ASSERT_EQ(t.size(), 10u);
  EXPECT_EQ(t.front(), 0.50);
  EXPECT_EQ(t[1], 0.55);
  EXPECT_EQ(t.back(), 0.95);
}

}  // namespace
}  // namespace foodsynth
