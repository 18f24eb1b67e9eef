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
#ifndef FOODSYNTH_RNG_H_
#define FOODSYNTH_RNG_H_

#include <cstdint>

#include "foodsynth/math.h"

namespace foodsynth {

// SplitMix64 finalizer. Bijective on 64-bit values.
std::uint64_t Mix64(std::uint64_t x);

// SplitMix64 stream. The output sequence for a given seed is fixed by golden
// tests and depends only on integer arithmetic, so it is identical on every
// platform. Real-valued draws use the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextU64();
  // Uniform in [lo, hi], both inclusive. Requires lo <= hi. Unbiased.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1).
  double Uniform01();
  // Uniform in [lo, hi); returns lo when lo == hi.
  double UniformReal(double lo, double hi);
  // Uniform on the unit sphere.
  Vec3 UnitSphereDirection();

  // Independent child stream. Consumes exactly one draw from this stream, so
  // forks taken in a fixed order never perturb each other.
  Rng Fork(std::uint64_t stream_tag);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace foodsynth

#endif  // FOODSYNTH_RNG_H_
