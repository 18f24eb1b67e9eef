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
// Python bindings for the dataset, rendering, RLE and evaluation operations.

#include <cstring>
#include <filesystem>
#include <string>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "foodsynth/coco.h"
#include "foodsynth/eval.h"
#include "foodsynth/gen_config.h"
#include "foodsynth/generate.h"
#include "foodsynth/randomizer.h"
#include "foodsynth/renderer.h"
#include "foodsynth/rle.h"
#include "foodsynth/scene.h"
#include "foodsynth/split.h"
#include "foodsynth/stats.h"

namespace py = pybind11;

namespace foodsynth {
namespace {

GenConfig ConfigFrom(const std::string& config_json) {
  return config_json.empty() ? GenConfig{} : GenConfigFromJson(config_json);
}

template <typename T>
py::array_t<T> ToArray(const std::vector<T>& values, std::vector<py::ssize_t> shape) {
  py::array_t<T> out(shape);
  std::memcpy(out.mutable_data(), values.data(), values.size() * sizeof(T));
  return out;
}

py::dict RenderScene(std::uint64_t seed, const std::string& config_json) {
  const RenderedImage image = GenerateImage(ConfigFrom(config_json), seed);
  const RenderOutput& r = image.render;
  py::dict out;
  out["rgb"] = ToArray(r.rgb, {r.height, r.width, 3});
  out["ids"] = ToArray(r.id_buffer, {r.height, r.width});
  out["depth"] = ToArray(r.depth, {r.height, r.width});
  out["difficulty"] = std::string(ToString(image.difficulty));
  out["num_masks"] = image.masks.size();
  return out;
}

py::dict EncodeRleArray(py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> mask) {
  if (mask.ndim() != 2) throw std::invalid_argument("mask must be 2-D");
  BinaryMask m(static_cast<int>(mask.shape(0)), static_cast<int>(mask.shape(1)));
  std::memcpy(m.data.data(), mask.data(), m.data.size());
  const Rle rle = EncodeRle(m);
  py::dict out;
  out["size"] = std::vector<int>{rle.height, rle.width};
  out["counts"] = rle.counts;
  return out;
}

py::array_t<std::uint8_t> DecodeRleDict(const py::dict& rle_dict) {
  const auto size = rle_dict["size"].cast<std::vector<int>>();
  if (size.size() != 2) throw std::invalid_argument("size must be [height, width]");
  Rle rle{size[0], size[1], rle_dict["counts"].cast<std::vector<std::uint32_t>>()};
  const BinaryMask m = DecodeRle(rle);
  py::array_t<std::uint8_t> out({m.height, m.width});
  auto* dst = out.mutable_data();
  for (std::size_t i = 0; i < m.data.size(); ++i) dst[i] = m.data[i] ? 1 : 0;
  return out;
}

std::string EvaluateFiles(const std::string& gt_path, const std::string& pred_path,
                          const std::string& iou_type, bool apply_nms,
                          const std::string& nms_iou_type, double nms_threshold,
                          int max_detections) {
  EvalConfig config;
  config.iou_type = ParseIouType(iou_type);
  config.apply_nms = apply_nms;
  config.nms_iou_type = ParseIouType(nms_iou_type);
  config.nms_threshold = nms_threshold;
  config.max_detections_per_image = max_detections;
  const CocoDataset gt = ReadDataset(gt_path);
  const std::vector<Detection> dets = ReadResults(pred_path);
  return ReportToJson(Evaluate(gt, dets, config));
}

py::dict GenerateFiles(const std::string& out_dir, std::size_t count, std::uint64_t seed,
                       const std::string& config_json, int jobs) {
  GenerateOptions options;
  options.config = ConfigFrom(config_json);
  options.count = count;
  options.seed = seed;
  options.out_dir = out_dir;
  options.jobs = jobs;
  GenerateSummary summary;
  {
    py::gil_scoped_release release;
    summary = GenerateDataset(options);
  }
  py::dict out;
  out["images"] = summary.images;
  out["instances"] = summary.instances;
  out["per_difficulty"] = summary.per_difficulty;
  out["annotations"] = summary.manifest.string();
  return out;
}

std::pair<std::string, std::string> SplitFile(const std::string& input, const std::string& out_dir,
                                              double train_fraction, const std::string& unit,
                                              std::uint64_t seed) {
  const std::filesystem::path in(input);
  const DatasetSplit split =
      SplitDataset(ReadDataset(in), SplitSpec{train_fraction, ParseSplitUnit(unit), seed});
  const std::filesystem::path dir = out_dir.empty() ? in.parent_path() : std::filesystem::path(out_dir);
  const auto [train, test] = WriteSplit(split, dir, in.stem().string());
  return {train.string(), test.string()};
}

}  // namespace
}  // namespace foodsynth

PYBIND11_MODULE(_core, m) {
  using namespace foodsynth;
  m.doc() = "Synthetic food-scene generation, rendering and COCO-style evaluation.";

  m.def("default_config_json", [] { return GenConfigToJson(GenConfig{}); },
        "Default generator configuration as JSON.");
  m.def("scene_seed", &SceneSeed, py::arg("base_seed"), py::arg("index"));
  m.def(
      "sample_scene_json",
      [](std::uint64_t seed, const std::string& config_json) {
        return SceneToJson(SampleScene(ConfigFrom(config_json), seed));
      },
      py::arg("seed"), py::arg("config_json") = "");
  m.def("render_scene", &RenderScene, py::arg("seed"), py::arg("config_json") = "",
        "Render one scene; returns rgb, ids and depth arrays.");
  m.def("encode_rle", &EncodeRleArray, py::arg("mask"));
  m.def("decode_rle", &DecodeRleDict, py::arg("rle"));
  m.def("evaluate_json", &EvaluateFiles, py::arg("gt_path"), py::arg("pred_path"),
        py::arg("iou_type") = "mask", py::arg("apply_nms") = true,
        py::arg("nms_iou_type") = "bbox", py::arg("nms_threshold") = 0.5,
        py::arg("max_detections") = 100);
  m.def("generate", &GenerateFiles, py::arg("out_dir"), py::arg("count"), py::arg("seed"),
        py::arg("config_json") = "", py::arg("jobs") = 1);
  m.def("split", &SplitFile, py::arg("input"), py::arg("out_dir") = "",
        py::arg("train_fraction") = 0.7, py::arg("unit") = "per-instance", py::arg("seed") = 0);
  m.def(
      "stats_json", [](const std::string& path) { return StatsToJson(ComputeStats(ReadDataset(path))); },
      py::arg("path"));
}
