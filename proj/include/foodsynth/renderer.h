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
#ifndef FOODSYNTH_RENDERER_H_
#define FOODSYNTH_RENDERER_H_

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "foodsynth/mask.h"
#include "foodsynth/scene.h"

namespace foodsynth {

struct RenderOptions {
  // Curved primitives are tessellated with this many segments.
  int subdivisions = 24;
  double ambient = 0.2;
  double shininess = 32.0;
  // Half size of the ground quad.
  double ground_half_size = 4.0;
  bool draw_tray = true;
  bool draw_ground = true;
  // Also return the unclamped linear radiance buffer.
  bool keep_linear = false;
};

// All buffers are row-major, `width * height` pixels.
struct RenderOutput {
  int width = 0;
  int height = 0;
  // Interleaved RGB, 8 bits per channel.
  std::vector<std::uint8_t> rgb;
  // 0 = background, k >= 1 = food instance k. Distractors are 0 here.
  std::vector<std::uint16_t> id_buffer;
  // View-space depth along the camera axis; +inf where nothing was drawn.
  std::vector<float> depth;
  // 1 where the visible surface belongs to a distractor.
  std::vector<std::uint8_t> distractor_mask;
  // Interleaved pre-clamp RGB radiance, only when keep_linear is set.
  std::vector<float> linear_rgb;
};

struct InstanceMask {
  int instance_id = 0;
  BinaryMask mask;
  std::int64_t area = 0;
  BoundingBox bbox;
};

// Z-buffered rasterization with ambient + Lambertian + Blinn-Phong shading
// under inverse-square point lights. Deterministic for a given scene.
// Throws std::invalid_argument for a degenerate camera.
RenderOutput Render(const Scene& scene, const RenderOptions& options = {});

// One mask per distinct nonzero id with at least `min_pixels` pixels, in
// ascending id order. Throws std::invalid_argument if min_pixels < 1.
std::vector<InstanceMask> ExtractMasks(const RenderOutput& out, int min_pixels);

// Rec. 709 luminance of a linear RGB triple.
double Luminance(float r, float g, float b);

}  // namespace foodsynth

#endif  // FOODSYNTH_RENDERER_H_
