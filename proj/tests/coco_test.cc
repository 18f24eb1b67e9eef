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
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <gtest/gtest.h>

#include "foodsynth/coco.h"
#include "foodsynth/gen_config.h"
#include "foodsynth/generate.h"
#include "foodsynth/png_io.h"
#include "support/test_scenes.h"

namespace foodsynth {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("foodsynth_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

GenConfig SmallConfig() {
  GenConfig c;
  c.image_width = 96;
  c.image_height = 80;
  c.min_mask_pixels = 16;
  return c;
}

std::vector<RenderedImage> Render(std::size_t n) {
  std::vector<RenderedImage> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(GenerateImage(SmallConfig(), SceneSeed(3, i)));
  return out;
}

TEST(CocoTest, WriteThenReadFiveScenes) {
  const auto records = Render(5);
  const fs::path dir = TempDir("coco_five");
  const fs::path manifest = WriteDataset(records, dir);
  EXPECT_EQ(manifest, dir / "annotations.json");
  const CocoDataset ds = ReadDataset(manifest);
  ASSERT_EQ(ds.images.size(), 5u);
  std::size_t masks = 0;
  for (const auto& r : records) masks += r.masks.size();
  EXPECT_EQ(ds.annotations.size(), masks);
  ASSERT_EQ(ds.categories.size(), 1u);
  EXPECT_EQ(ds.categories[0].name, "food");
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(ds.images[i].file_name, ImageFileName(i));
    EXPECT_EQ(ds.images[i].width, 96);
    EXPECT_EQ(ds.images[i].height, 80);
    EXPECT_TRUE(fs::exists(dir / "images" / ImageFileName(i)));
    EXPECT_TRUE(fs::exists(dir / "masks" / ImageFileName(i)));
  }
  for (const CocoAnnotation& a : ds.annotations) {
    const BinaryMask m = DecodeRle(a.segmentation);
    EXPECT_EQ(a.area, MaskArea(m));
    EXPECT_EQ(a.bbox, MaskBox(m));
    EXPECT_EQ(a.category_id, 1);
    EXPECT_EQ(a.iscrowd, 0);
  }
}

TEST(CocoTest, MaskPngHoldsInstanceIds) {
  const auto records = Render(1);
  const fs::path dir = TempDir("coco_mask_png");
  WriteDataset(records, dir);
  const PngImage png = ReadPng(dir / "masks" / ImageFileName(0));
  EXPECT_EQ(png.bit_depth, 16);
  EXPECT_EQ(png.channels, 1);
  ASSERT_EQ(png.samples.size(), records[0].render.id_buffer.size());
  for (std::size_t i = 0; i < png.samples.size(); ++i) {
    ASSERT_EQ(png.samples[i], records[0].render.id_buffer[i]);
  }
  const PngImage rgb = ReadPng(dir / "images" / ImageFileName(0));
  EXPECT_EQ(rgb.channels, 3);
  EXPECT_EQ(rgb.bit_depth, 8);
  for (std::size_t i = 0; i < rgb.samples.size(); ++i) {
    ASSERT_EQ(rgb.samples[i], records[0].render.rgb[i]);
  }
}

TEST(CocoTest, ByteIdenticalWrites) {
  const auto records = Render(3);
  const fs::path a = TempDir("coco_bytes_a");
  const fs::path b = TempDir("coco_bytes_b");
  WriteDataset(records, a);
  WriteDataset(records, b);
  EXPECT_EQ(Slurp(a / "annotations.json"), Slurp(b / "annotations.json"));
  EXPECT_EQ(Slurp(a / "images" / ImageFileName(2)), Slurp(b / "images" / ImageFileName(2)));
  // write -> read -> write is byte-identical.
  const fs::path c = TempDir("coco_bytes_c");
  WriteDatasetJson(ReadDataset(a / "annotations.json"), c / "annotations.json");
  EXPECT_EQ(Slurp(a / "annotations.json"), Slurp(c / "annotations.json"));
}

TEST(CocoTest, SortedKeys) {
  const std::string text = DatasetToJson(testing::GenerateInMemory(SmallConfig(), 1, 1));
  EXPECT_LT(text.find("\"annotations\""), text.find("\"categories\""));
  EXPECT_LT(text.find("\"categories\""), text.find("\"images\""));
  EXPECT_LT(text.find("\"area\""), text.find("\"bbox\""));
}

TEST(CocoTest, UnknownImageIdNamesAnnotation) {
  const std::string text = R"({"images": [{"id": 1, "file_name": "a.png", "width": 2, "height": 2}],
    "annotations": [{"id": 17, "image_id": 9, "category_id": 1, "iscrowd": 0, "area": 4,
                     "bbox": [0, 0, 2, 2], "segmentation": {"size": [2, 2], "counts": [0, 4]}}],
    "categories": [{"id": 1, "name": "food"}]})";
  try {
    DatasetFromJson(text, "gt.json");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("annotation 17"), std::string::npos) << msg;
    EXPECT_NE(msg.find("index 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("gt.json"), std::string::npos) << msg;
  }
}

TEST(CocoTest, InvariantViolationsOnRead) {
  const std::string base = R"({"images": [{"id": 1, "width": 2, "height": 2}], "annotations": [
      {"id": 1, "image_id": 1, "area": AREA, "bbox": BOX,
       "segmentation": {"size": [2, 2], "counts": COUNTS}}]})";
  auto make = [&](const std::string& area, const std::string& box, const std::string& counts) {
    std::string s = base;
    s.replace(s.find("AREA"), 4, area);
    s.replace(s.find("BOX"), 3, box);
    s.replace(s.find("COUNTS"), 6, counts);
    return s;
  };
  EXPECT_NO_THROW(DatasetFromJson(make("3", "[0, 0, 2, 2]", "[1, 3]")));
  EXPECT_THROW(DatasetFromJson(make("4", "[0, 0, 2, 2]", "[1, 3]")), DataError);
  EXPECT_THROW(DatasetFromJson(make("3", "[0, 0, 1, 2]", "[1, 3]")), DataError);
  EXPECT_THROW(DatasetFromJson(make("3", "[0, 0, 2, 2]", "[1, 2]")), DataError);
  EXPECT_THROW(DatasetFromJson("{\"images\": [}"), DataError);
  EXPECT_THROW(DatasetFromJson("{\"images\": []}"), DataError);
}

TEST(CocoTest, UnknownFieldsIgnored) {
  const CocoDataset ds = DatasetFromJson(
      R"({"info": {"year": 2020}, "images": [{"id": 4, "width": 2, "height": 2, "license": 3,
           "difficulty": "hard"}], "annotations": []})");
  ASSERT_EQ(ds.images.size(), 1u);
  EXPECT_EQ(ds.images[0].difficulty, "hard");
}

TEST(CocoTest, MissingFileNamesPath) {
  try {
    ReadDataset("/nonexistent/dir/annotations.json");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/annotations.json"), std::string::npos);
  }
  EXPECT_THROW(ReadResults("/nonexistent/results.json"), DataError);
}

TEST(ResultsTest, RoundTrip) {
  const CocoDataset gt = testing::GenerateInMemory(SmallConfig(), 2, 4);
  std::vector<Detection> dets = DetectionsFromGroundTruth(gt);
  ASSERT_FALSE(dets.empty());
  dets[0].score = 0.25;
  dets.push_back({gt.images[0].id, 1, 0.5, std::nullopt, {1, 2, 3, 4}});
  EXPECT_EQ(ResultsFromJson(ResultsToJson(dets)), dets);
  const fs::path dir = TempDir("results_rt");
  WriteResults(dets, dir / "results.json");
  EXPECT_EQ(ReadResults(dir / "results.json"), dets);
}

TEST(ResultsTest, ValidationAndDefaults) {
  EXPECT_TRUE(ResultsFromJson("[]").empty());
  const auto d = ResultsFromJson(
      R"([{"image_id": 1, "score": 0.5, "segmentation": {"size": [2, 2], "counts": [1, 3]}}])");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].category_id, 1);
  EXPECT_EQ(d[0].bbox, (BoundingBox{0, 0, 2, 2}));
  EXPECT_THROW(ResultsFromJson(R"([{"image_id": 1, "score": 1.5, "bbox": [0,0,1,1]}])"),
               DataError);
  EXPECT_THROW(ResultsFromJson(R"([{"image_id": 1, "score": 0.5}])"), DataError);
  EXPECT_THROW(ResultsFromJson(R"([{"image_id": 1, "category_id": 2, "score": 0.5,
                                    "bbox": [0,0,1,1]}])"),
               DataError);
  EXPECT_THROW(ResultsFromJson(R"({"image_id": 1})"), DataError);
}

}  // namespace
}  // namespace foodsynth
