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
#include "foodsynth/texture.h"

#include <algorithm>
#include <cmath>

#include "foodsynth/rng.h"

namespace foodsynth {

namespace {

double LatticeValue(std::int64_t x, std::int64_t y, std::int64_t z, std::uint32_t seed) {
  std::uint64_t h = Mix64(static_cast<std::uint64_t>(seed) ^ 0xA5A5A5A5ull);
  h = Mix64(h ^ static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull);
  h = Mix64(h ^ static_cast<std::uint64_t>(y) * 0xC2B2AE3D27D4EB4Full);
  h = Mix64(h ^ static_cast<std::uint64_t>(z) * 0x165667B19E3779F9ull);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double Fade(double t) { return t * t * (3.0 - 2.0 * t); }
double Lerp(double a, double b, double t) { return a + (b - a) * t; }

Rgb Mix(const Rgb& a, const Rgb& b, double t) {
  return {Lerp(a.r, b.r, t), Lerp(a.g, b.g, t), Lerp(a.b, b.b, t)};
}

// Cell coordinates are offset by half a cell so axis-aligned planes at
// round coordinates (tray top, ground) never sit on a parity boundary.
std::int64_t Cell(double v, double scale) {
  return static_cast<std::int64_t>(std::floor(v / scale + 0.5));
}

double Checker(const Vec3& p, double scale) {
  const std::int64_t s = Cell(p.x, scale) + Cell(p.y, scale) + Cell(p.z, scale);
  return (s & 1) ? 1.0 : 0.0;
}

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double ValueNoise(const Vec3& p, std::uint32_t seed) {
  const double fx = std::floor(p.x);
  const double fy = std::floor(p.y);
  const double fz = std::floor(p.z);
  const auto ix = static_cast<std::int64_t>(fx);
  const auto iy = static_cast<std::int64_t>(fy);
  const auto iz = static_cast<std::int64_t>(fz);
  const double tx = Fade(p.x - fx);
  const double ty = Fade(p.y - fy);
  const double tz = Fade(p.z - fz);

  double c[2][2][2];
  for (int dz = 0; dz < 2; ++dz) {
    for (int dy = 0; dy < 2; ++dy) {
      for (int dx = 0; dx < 2; ++dx) {
        c[dz][dy][dx] = LatticeValue(ix + dx, iy + dy, iz + dz, seed);
      }
    }
  }
  const double x00 = Lerp(c[0][0][0], c[0][0][1], tx);
  const double x10 = Lerp(c[0][1][0], c[0][1][1], tx);
  const double x01 = Lerp(c[1][0][0], c[1][0][1], tx);
  const double x11 = Lerp(c[1][1][0], c[1][1][1], tx);
  return Lerp(Lerp(x00, x10, ty), Lerp(x01, x11, ty), tz);
}

double FractalNoise(const Vec3& p, int octaves, std::uint32_t seed) {
  double sum = 0.0;
  double norm = 0.0;
  double amplitude = 1.0;
  double frequency = 1.0;
  for (int o = 0; o < octaves; ++o) {
    sum += amplitude * ValueNoise(p * frequency, seed + static_cast<std::uint32_t>(o) * 7919u);
    norm += amplitude;
    amplitude *= 0.5;
    frequency *= 2.0;
  }
  return norm > 0.0 ? sum / norm : 0.0;
}

Rgb EvaluateMaterial(const Material& m, const Vec3& q) {
  double t = 0.0;
  switch (m.texture) {
    case TextureKind::kSolid:
      return {Clamp01(m.base_color.r), Clamp01(m.base_color.g), Clamp01(m.base_color.b)};
    case TextureKind::kChecker:
      t = Checker(q, m.scale);
      break;
    case TextureKind::kStripes:
      t = (Cell(q.x, m.scale) & 1) ? 1.0 : 0.0;
      break;
    case TextureKind::kValueNoise:
      t = FractalNoise(q / m.scale, m.noise_octaves, m.noise_seed);
      break;
    case TextureKind::kBlended:
      t = 0.5 * Checker(q, m.scale * 2.0) +
          0.5 * FractalNoise(q / m.scale, m.noise_octaves, m.noise_seed);
      break;
  }
  const Rgb c = Mix(m.base_color, m.secondary_color, Clamp01(t));
  return {Clamp01(c.r), Clamp01(c.g), Clamp01(c.b)};
}

}  // namespace foodsynth
