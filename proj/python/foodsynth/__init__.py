# Copyright 2026 The foodsynth Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Synthetic food-scene generation, rendering and COCO-style evaluation."""

import json

from foodsynth import _core
from foodsynth._core import decode_rle, encode_rle, scene_seed

__all__ = [
    "decode_rle",
    "default_config",
    "encode_rle",
    "evaluate",
    "generate",
    "render_scene",
    "sample_scene",
    "scene_seed",
    "split",
    "stats",
]


def _config_json(config):
  return "" if config is None else json.dumps(config)


def default_config():
  """Returns the default generator configuration as a dict."""
  return json.loads(_core.default_config_json())


def sample_scene(seed, config=None):
  """Samples a scene description without rendering it."""
  return json.loads(_core.sample_scene_json(seed, _config_json(config)))


def render_scene(seed, config=None):
  """Renders one scene; returns a dict with rgb, ids and depth arrays."""
  return _core.render_scene(seed, _config_json(config))


def generate(out_dir, count, seed, config=None, jobs=1):
  """Writes a dataset under out_dir and returns a summary dict."""
  return _core.generate(str(out_dir), count, seed, _config_json(config), jobs)


def split(input_path, out_dir=None, train_fraction=0.7, unit="per-instance", seed=0):
  """Writes <stem>_train.json and <stem>_test.json; returns both paths."""
  return _core.split(str(input_path), "" if out_dir is None else str(out_dir), train_fraction,
                     unit, seed)


def evaluate(gt_path, pred_path, iou_type="mask", apply_nms=True, nms_iou_type="bbox",
             nms_threshold=0.5, max_detections=100):
  """Scores a results file against an annotations file; returns the report dict."""
  return json.loads(
      _core.evaluate_json(str(gt_path), str(pred_path), iou_type, apply_nms, nms_iou_type,
                          nms_threshold, max_detections))


def stats(path):
  """Returns summary statistics of an annotations file."""
  return json.loads(_core.stats_json(str(path)))
