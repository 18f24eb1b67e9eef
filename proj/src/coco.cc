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
#include "foodsynth/coco.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "foodsynth/png_io.h"
#include "json.hpp"

namespace foodsynth {

namespace {

using nlohmann::json;

json RleToJson(const Rle& rle) {
  return {{"counts", rle.counts}, {"size", {rle.height, rle.width}}};
}

json BoxToJson(const BoundingBox& b) { return json::array({b.x, b.y, b.w, b.h}); }

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw DataError("failed writing " + path.string());
}

json Parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(source + ": malformed JSON: " + e.what());
  }
}

// Field access that reports the record instead of a bare json exception.
class RecordReader {
 public:
  RecordReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) Fail("expected an object");
  }

  const json& Require(const char* key) const {
    auto it = j_.find(key);
    if (it == j_.end()) Fail(std::string("missing field '") + key + "'");
    return *it;
  }

  template <typename T>
  T Get(const char* key) const {
    try {
      return Require(key).get<T>();
    } catch (const json::exception&) {
      Fail(std::string("field '") + key + "' has the wrong type");
    }
  }

  template <typename T>
  T GetOr(const char* key, T fallback) const {
    if (!j_.contains(key)) return fallback;
    return Get<T>(key);
  }

  bool Has(const char* key) const { return j_.contains(key); }

  Rle GetRle(const char* key) const {
    const json& s = Require(key);
    if (!s.is_object() || !s.contains("size") || !s.contains("counts")) {
      Fail(std::string("field '") + key + "' must be an uncompressed RLE {size, counts}");
    }
    const json& size = s.at("size");
    const json& counts = s.at("counts");
    if (!size.is_array() || size.size() != 2 || !counts.is_array()) {
      Fail(std::string("field '") + key + "' must be an uncompressed RLE {size, counts}");
    }
    Rle rle;
    try {
      rle.height = size[0].get<int>();
      rle.width = size[1].get<int>();
      for (const json& c : counts) {
        if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
          Fail(std::string("field '") + key + "' counts must be non-negative integers");
        }
        rle.counts.push_back(c.get<std::uint32_t>());
      }
    } catch (const json::exception&) {
      Fail(std::string("field '") + key + "' has the wrong type");
    }
    try {
      CheckRle(rle);
    } catch (const RleError& e) {
      Fail(e.what());
    }
    return rle;
  }

  BoundingBox GetBox(const char* key) const {
    const json& b = Require(key);
    if (!b.is_array() || b.size() != 4) Fail(std::string("field '") + key + "' must be [x,y,w,h]");
    try {
      return {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    } catch (const json::exception&) {
      Fail(std::string("field '") + key + "' must be numeric");
    }
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw DataError(where_ + ": " + message);
  }

 private:
  const json& j_;
  std::string where_;
};

}  // namespace

void ValidateDataset(const CocoDataset& dataset) {
  std::map<std::int64_t, const ImageInfo*> images;
  for (std::size_t i = 0; i < dataset.images.size(); ++i) {
    const ImageInfo& img = dataset.images[i];
    const std::string where = "image " + std::to_string(img.id) + " (index " + std::to_string(i) + ")";
    if (!images.emplace(img.id, &img).second) throw DataError(where + ": duplicate image id");
    if (img.width < 1 || img.height < 1) throw DataError(where + ": width and height must be >= 1");
  }
  std::set<std::int64_t> ann_ids;
  for (std::size_t i = 0; i < dataset.annotations.size(); ++i) {
    const CocoAnnotation& a = dataset.annotations[i];
    const std::string where =
        "annotation " + std::to_string(a.id) + " (index " + std::to_string(i) + ")";
    if (!ann_ids.insert(a.id).second) throw DataError(where + ": duplicate annotation id");
    auto it = images.find(a.image_id);
    if (it == images.end()) {
      throw DataError(where + ": references unknown image_id " + std::to_string(a.image_id));
    }
    if (a.category_id != kFoodCategoryId) throw DataError(where + ": category_id must be 1");
    if (a.iscrowd != 0) throw DataError(where + ": iscrowd must be 0");
    const ImageInfo& img = *it->second;
    if (a.segmentation.height != img.height || a.segmentation.width != img.width) {
      throw DataError(where + ": segmentation size does not match image " +
                      std::to_string(img.id));
    }
    try {
      CheckRle(a.segmentation);
    } catch (const RleError& e) {
      throw DataError(where + ": " + e.what());
    }
    if (RleArea(a.segmentation) != a.area) {
      throw DataError(where + ": area " + std::to_string(a.area) +
                      " does not match the decoded mask");
    }
    if (RleBox(a.segmentation) != a.bbox) {
      throw DataError(where + ": bbox is not the tight box of the decoded mask");
    }
  }
}

std::string DatasetToJson(const CocoDataset& dataset) {
  json images = json::array();
  for (const ImageInfo& img : dataset.images) {
    json j = {{"file_name", img.file_name},
              {"height", img.height},
              {"id", img.id},
              {"width", img.width}};
    if (!img.difficulty.empty()) j["difficulty"] = img.difficulty;
    images.push_back(std::move(j));
  }
  json annotations = json::array();
  for (const CocoAnnotation& a : dataset.annotations) {
    annotations.push_back({{"area", a.area},
                           {"bbox", BoxToJson(a.bbox)},
                           {"category_id", a.category_id},
                           {"id", a.id},
                           {"image_id", a.image_id},
                           {"iscrowd", a.iscrowd},
                           {"segmentation", RleToJson(a.segmentation)}});
  }
  json categories = json::array();
  for (const Category& c : dataset.categories) {
    categories.push_back({{"id", c.id}, {"name", c.name}});
  }
  json doc = {{"annotations", annotations}, {"categories", categories}, {"images", images}};
  return doc.dump() + "\n";
}

CocoDataset DatasetFromJson(const std::string& text, const std::string& source) {
  const json doc = Parse(text, source);
  RecordReader top(doc, source);
  CocoDataset ds;
  const json& images = top.Require("images");
  const json& annotations = top.Require("annotations");
  if (!images.is_array() || !annotations.is_array()) {
    throw DataError(source + ": 'images' and 'annotations' must be arrays");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    RecordReader r(images[i], source + ": images[" + std::to_string(i) + "]");
    ImageInfo img;
    img.id = r.Get<std::int64_t>("id");
    img.file_name = r.GetOr<std::string>("file_name", "");
    img.width = r.Get<int>("width");
    img.height = r.Get<int>("height");
    img.difficulty = r.GetOr<std::string>("difficulty", "");
    ds.images.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    RecordReader r(annotations[i], source + ": annotations[" + std::to_string(i) + "]");
    CocoAnnotation a;
    a.id = r.Get<std::int64_t>("id");
    a.image_id = r.Get<std::int64_t>("image_id");
    a.category_id = r.GetOr<int>("category_id", kFoodCategoryId);
    a.segmentation = r.GetRle("segmentation");
    a.bbox = r.GetBox("bbox");
    a.area = r.Get<std::int64_t>("area");
    a.iscrowd = r.GetOr<int>("iscrowd", 0);
    ds.annotations.push_back(std::move(a));
  }
  if (doc.contains("categories")) {
    ds.categories.clear();
    const json& cats = doc.at("categories");
    if (!cats.is_array()) throw DataError(source + ": 'categories' must be an array");
    for (std::size_t i = 0; i < cats.size(); ++i) {
      RecordReader r(cats[i], source + ": categories[" + std::to_string(i) + "]");
      ds.categories.push_back({r.Get<int>("id"), r.Get<std::string>("name")});
    }
  }
  try {
    ValidateDataset(ds);
  } catch (const DataError& e) {
    throw DataError(source + ": " + e.what());
  }
  return ds;
}

CocoDataset ReadDataset(const std::filesystem::path& path) {
  return DatasetFromJson(ReadFile(path), path.string());
}

void WriteDatasetJson(const CocoDataset& dataset, const std::filesystem::path& path) {
  WriteFile(path, DatasetToJson(dataset));
}

std::string ResultsToJson(const std::vector<Detection>& detections) {
  json list = json::array();
  for (const Detection& d : detections) {
    json j = {{"bbox", BoxToJson(d.bbox)},
              {"category_id", d.category_id},
              {"image_id", d.image_id},
              {"score", d.score}};
    if (d.segmentation) j["segmentation"] = RleToJson(*d.segmentation);
    list.push_back(std::move(j));
  }
  return list.dump() + "\n";
}

std::vector<Detection> ResultsFromJson(const std::string& text, const std::string& source) {
  const json doc = Parse(text, source);
  if (!doc.is_array()) throw DataError(source + ": results must be a JSON array");
  std::vector<Detection> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    RecordReader r(doc[i], source + ": results[" + std::to_string(i) + "]");
    Detection d;
    d.image_id = r.Get<std::int64_t>("image_id");
    d.category_id = r.GetOr<int>("category_id", kFoodCategoryId);
    if (d.category_id != kFoodCategoryId) r.Fail("category_id must be 1");
    d.score = r.Get<double>("score");
    if (!(d.score >= 0.0 && d.score <= 1.0)) r.Fail("score must lie in [0, 1]");
    if (r.Has("segmentation")) d.segmentation = r.GetRle("segmentation");
    if (r.Has("bbox")) {
      d.bbox = r.GetBox("bbox");
    } else if (d.segmentation) {
      d.bbox = RleBox(*d.segmentation);
    } else {
      r.Fail("needs a bbox or a segmentation");
    }
    if (d.bbox.w < 0 || d.bbox.h < 0) r.Fail("bbox width and height must be >= 0");
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Detection> ReadResults(const std::filesystem::path& path) {
  return ResultsFromJson(ReadFile(path), path.string());
}

void WriteResults(const std::vector<Detection>& detections, const std::filesystem::path& path) {
  WriteFile(path, ResultsToJson(detections));
}

std::vector<Detection> DetectionsFromGroundTruth(const CocoDataset& dataset) {
  std::vector<Detection> out;
  out.reserve(dataset.annotations.size());
  for (const CocoAnnotation& a : dataset.annotations) {
    out.push_back({a.image_id, a.category_id, 1.0, a.segmentation, a.bbox});
  }
  return out;
}

std::string ImageFileName(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu.png", index);
  return buf;
}

ImageInfo WriteImageFiles(const std::filesystem::path& root, std::size_t index,
                          const RenderOutput& render, Difficulty difficulty) {
  const std::string name = ImageFileName(index);
  WritePngRgb8(root / "images" / name, render.width, render.height, render.rgb);
  WritePngGray16(root / "masks" / name, render.width, render.height, render.id_buffer);
  ImageInfo info;
  info.id = static_cast<std::int64_t>(index) + 1;
  info.file_name = name;
  info.width = render.width;
  info.height = render.height;
  info.difficulty = std::string(ToString(difficulty));
  return info;
}

std::vector<CocoAnnotation> AnnotationsFromMasks(std::span<const InstanceMask> masks,
                                                 std::int64_t image_id) {
  std::vector<CocoAnnotation> out;
  out.reserve(masks.size());
  for (const InstanceMask& m : masks) {
    CocoAnnotation a;
    a.image_id = image_id;
    a.segmentation = EncodeRle(m.mask);
    a.bbox = m.bbox;
    a.area = m.area;
    out.push_back(std::move(a));
  }
  return out;
}

CocoDataset AssembleDataset(std::vector<ImageInfo> images,
                            std::vector<std::vector<CocoAnnotation>> per_image) {
  CocoDataset ds;
  ds.images = std::move(images);
  std::int64_t next_id = 1;
  for (auto& group : per_image) {
    for (CocoAnnotation& a : group) {
      a.id = next_id++;
      ds.annotations.push_back(std::move(a));
    }
  }
  return ds;
}

std::filesystem::path WriteDataset(std::span<const RenderedImage> records,
                                   const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir / "images", ec);
  if (!ec) std::filesystem::create_directories(output_dir / "masks", ec);
  if (ec) throw IoError("cannot create dataset directories under " + output_dir.string());
  std::vector<ImageInfo> images;
  std::vector<std::vector<CocoAnnotation>> per_image;
  for (std::size_t i = 0; i < records.size(); ++i) {
    images.push_back(WriteImageFiles(output_dir, i, records[i].render, records[i].difficulty));
    per_image.push_back(AnnotationsFromMasks(records[i].masks, images.back().id));
  }
  const CocoDataset ds = AssembleDataset(std::move(images), std::move(per_image));
  ValidateDataset(ds);
  const std::filesystem::path manifest = output_dir / "annotations.json";
  WriteDatasetJson(ds, manifest);
  return manifest;
}

}  // namespace foodsynth
