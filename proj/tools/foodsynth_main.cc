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

// foodsynth: generate, split, evaluate and summarize synthetic meal-tray
// instance segmentation datasets.
//
// Exit codes: 0 success, 2 usage error, 3 data error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "foodsynth/coco.h"
#include "foodsynth/eval.h"
#include "foodsynth/gen_config.h"
#include "foodsynth/generate.h"
#include "foodsynth/png_io.h"
#include "foodsynth/split.h"
#include "foodsynth/stats.h"
#include "json.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

namespace fs = std::filesystem;
using namespace foodsynth;

struct GenerateArgs {
  std::string config_path;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string difficulty;
  std::optional<int> width;
  std::optional<int> height;
  int jobs = 0;
};

struct SplitArgs {
  std::string input;
  double train_fraction = 0.7;
  std::string unit = "per-instance";
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct EvaluateArgs {
  std::string gt;
  std::string pred;
  std::string iou_type = "mask";
  std::string nms_iou_type = "bbox";
  double nms_threshold = 0.5;
  bool no_nms = false;
  int max_detections = 100;
  std::string out;
};

struct StatsArgs {
  std::string input;
};

int RunGenerate(const GenerateArgs& args) {
  GenConfig config = args.config_path.empty() ? GenConfig{} : LoadGenConfig(args.config_path);
  if (!args.difficulty.empty()) config.difficulty = ParseDifficultySetting(args.difficulty);
  if (args.width) config.image_width = *args.width;
  if (args.height) config.image_height = *args.height;
  ValidateGenConfig(config);

  GenerateOptions options;
  options.config = config;
  options.count = args.count;
  options.seed = args.seed;
  options.out_dir = args.out_dir;
  options.jobs = args.jobs > 0 ? args.jobs
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  options.progress = [](std::size_t done, std::size_t total) {
    std::fprintf(stderr, "\rgenerated %zu/%zu", done, total);
    if (done == total) std::fprintf(stderr, "\n");
  };
  const GenerateSummary summary = GenerateDataset(options);

  nlohmann::json out = {{"annotations", summary.manifest.string()},
                        {"images", summary.images},
                        {"instances", summary.instances},
                        {"per_difficulty", summary.per_difficulty}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunSplit(const SplitArgs& args) {
  const CocoDataset dataset = ReadDataset(args.input);
  SplitSpec spec;
  spec.train_fraction = args.train_fraction;
  spec.unit = ParseSplitUnit(args.unit);
  spec.seed = args.seed;
  const DatasetSplit split = SplitDataset(dataset, spec);
  const fs::path input(args.input);
  const fs::path dir = args.out_dir.empty() ? input.parent_path() : fs::path(args.out_dir);
  if (!dir.empty()) fs::create_directories(dir);
  const auto [train, test] = WriteSplit(split, dir, input.stem().string());

  nlohmann::json out = {
      {"train", {{"path", train.string()},
                 {"images", split.train.images.size()},
                 {"instances", split.train.annotations.size()}}},
      {"test", {{"path", test.string()},
                {"images", split.test.images.size()},
                {"instances", split.test.annotations.size()}}}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunEvaluate(const EvaluateArgs& args) {
  std::vector<IouType> types;
  if (args.iou_type == "both") {
    types = {IouType::kMask, IouType::kBox};
  } else {
    types = {ParseIouType(args.iou_type)};
  }
  const CocoDataset gt = ReadDataset(args.gt);
  const std::vector<Detection> detections = ReadResults(args.pred);

  nlohmann::json reports = nlohmann::json::array();
  for (IouType type : types) {
    EvalConfig config;
    config.iou_type = type;
    config.apply_nms = !args.no_nms;
    config.nms_threshold = args.nms_threshold;
    config.nms_iou_type = ParseIouType(args.nms_iou_type);
    config.max_detections_per_image = args.max_detections;
    const EvalReport report = Evaluate(gt, detections, config);
    std::cout << FormatReportTable(report);
    reports.push_back(nlohmann::json::parse(ReportToJson(report)));
  }
  if (!args.out.empty()) {
    const nlohmann::json& doc = reports.size() == 1 ? reports[0] : reports;
    std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError("cannot open " + args.out + " for writing");
    file << doc.dump(2) << "\n";
  }
  return 0;
}

int RunStats(const StatsArgs& args) {
  const CocoDataset dataset = ReadDataset(args.input);
  std::cout << StatsToJson(ComputeStats(dataset)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic meal-tray instance segmentation data: generate, split, evaluate, stats"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Render a synthetic dataset");
  generate->add_option("--config", gen.config_path, "JSON generation config")
      ->check(CLI::ExistingFile);
  generate->add_option("--count", gen.count, "Number of images")->required();
  generate->add_option("--seed", gen.seed, "Base seed")->required();
  generate->add_option("--out", gen.out_dir, "Output directory")->required();
  generate->add_option("--difficulty", gen.difficulty, "Background difficulty")
      ->check(CLI::IsMember({"easy", "medium", "hard", "mixed"}));
  generate->add_option("--width", gen.width, "Image width in pixels");
  generate->add_option("--height", gen.height, "Image height in pixels");
  generate->add_option("--jobs", gen.jobs, "Worker threads (default: all cores)");

  SplitArgs spl;
  CLI::App* split = app.add_subcommand("split", "Split a dataset into train and test files");
  split->add_option("--input", spl.input, "annotations.json")->required();
  split->add_option("--train-frac", spl.train_fraction, "Train fraction in (0,1)");
  split->add_option("--unit", spl.unit, "Fraction unit")
      ->check(CLI::IsMember({"per-instance", "per-image", "per_instance", "per_image"}));
  split->add_option("--seed", spl.seed, "Shuffle seed");
  split->add_option("--out-dir", spl.out_dir, "Output directory (default: next to input)");

  EvaluateArgs ev;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score results against ground truth");
  evaluate->add_option("--gt", ev.gt, "Ground-truth annotations.json")->required();
  evaluate->add_option("--pred", ev.pred, "results.json")->required();
  evaluate->add_option("--iou-type", ev.iou_type, "mask, bbox or both")
      ->check(CLI::IsMember({"mask", "segm", "bbox", "both"}));
  evaluate->add_option("--nms-iou-type", ev.nms_iou_type, "IoU used by NMS")
      ->check(CLI::IsMember({"mask", "segm", "bbox"}));
  evaluate->add_option("--nms-threshold", ev.nms_threshold, "NMS IoU threshold");
  evaluate->add_flag("--no-nms", ev.no_nms, "Skip NMS");
  evaluate->add_option("--max-dets", ev.max_detections, "Detections kept per image");
  evaluate->add_option("--out", ev.out, "Write the JSON report here");

  StatsArgs st;
  CLI::App* stats = app.add_subcommand("stats", "Summarize a dataset");
  stats->add_option("--input", st.input, "annotations.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*split) return RunSplit(spl);
    if (*evaluate) return RunEvaluate(ev);
    if (*stats) return RunStats(st);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
