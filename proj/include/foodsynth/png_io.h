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
#ifndef FOODSYNTH_PNG_IO_H_
#define FOODSYNTH_PNG_IO_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace foodsynth {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 8-bit RGB, interleaved row-major.
void WritePngRgb8(const std::filesystem::path& path, int width, int height,
                  const std::vector<std::uint8_t>& rgb);
// 16-bit grayscale, row-major.
void WritePngGray16(const std::filesystem::path& path, int width, int height,
                    const std::vector<std::uint16_t>& values);

struct PngImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  int bit_depth = 0;
  // Samples widened to 16 bits, interleaved row-major.
  std::vector<std::uint16_t> samples;
};

PngImage ReadPng(const std::filesystem::path& path);

}  // namespace foodsynth

#endif  // FOODSYNTH_PNG_IO_H_
