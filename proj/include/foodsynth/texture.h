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
#ifndef FOODSYNTH_TEXTURE_H_
#define FOODSYNTH_TEXTURE_H_

#include <cstdint>

#include "foodsynth/math.h"
#include "foodsynth/scene.h"

namespace foodsynth {

// Lattice value noise in [0, 1], trilinear with smoothstep fade.
double ValueNoise(const Vec3& p, std::uint32_t seed);

// Sum of `octaves` value-noise layers at doubling frequency and halving
// amplitude, normalized back to [0, 1].
double FractalNoise(const Vec3& p, int octaves, std::uint32_t seed);

// Albedo of `material` at a point in texture space. Every channel of the
// result lies in [0, 1].
Rgb EvaluateMaterial(const Material& material, const Vec3& texture_point);

}  // namespace foodsynth

#endif  // FOODSYNTH_TEXTURE_H_
