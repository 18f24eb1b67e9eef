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
#include "foodsynth/png_io.h"

#include <png.h>

#include <cstdio>
#include <memory>
#include <string>

namespace foodsynth {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void PngErrorHandler(png_structp png, png_const_charp message) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  if (what) *what = message;
  png_longjmp(png, 1);
}

void PngWarningHandler(png_structp, png_const_charp) {}

// libpng reports errors through longjmp, so this function owns no objects
// with nontrivial destructors between setjmp and the libpng calls.
bool WriteRows(std::FILE* file, int width, int height, int bit_depth, int color_type,
               png_bytep* rows, std::string* error) {
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, error, PngErrorHandler, PngWarningHandler);
  if (!png) return false;
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_init_io(png, file);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
               bit_depth, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

void WriteImage(const std::filesystem::path& path, int width, int height, int bit_depth,
                int color_type, std::vector<png_bytep>& rows) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  std::string error;
  if (!WriteRows(file.get(), width, height, bit_depth, color_type, rows.data(), &error)) {
    throw IoError("failed to write PNG " + path.string() + ": " + error);
  }
  if (std::fflush(file.get()) != 0) throw IoError("failed to flush " + path.string());
}

}  // namespace

void WritePngRgb8(const std::filesystem::path& path, int width, int height,
                  const std::vector<std::uint8_t>& rgb) {
  if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
    throw IoError("RGB buffer size does not match image dimensions");
  }
  std::vector<std::uint8_t> copy = rgb;
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) rows[y] = copy.data() + static_cast<std::size_t>(y) * width * 3;
  WriteImage(path, width, height, 8, PNG_COLOR_TYPE_RGB, rows);
}

void WritePngGray16(const std::filesystem::path& path, int width, int height,
                    const std::vector<std::uint16_t>& values) {
  if (values.size() != static_cast<std::size_t>(width) * height) {
    throw IoError("gray buffer size does not match image dimensions");
  }
  // PNG stores 16-bit samples big-endian.
  std::vector<std::uint8_t> bytes(values.size() * 2);
  for (std::size_t i = 0; i < values.size(); ++i) {
    bytes[2 * i] = static_cast<std::uint8_t>(values[i] >> 8);
    bytes[2 * i + 1] = static_cast<std::uint8_t>(values[i] & 0xFF);
  }
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) rows[y] = bytes.data() + static_cast<std::size_t>(y) * width * 2;
  WriteImage(path, width, height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

PngImage ReadPng(const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw IoError("cannot read PNG " + path.string() + ": " + image.message);
  }
  const bool gray = (image.format & PNG_FORMAT_FLAG_COLOR) == 0;
  const bool wide = (image.format & PNG_FORMAT_FLAG_LINEAR) != 0;
  PngImage out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.channels = gray ? 1 : 3;
  out.bit_depth = wide ? 16 : 8;
  if (wide) {
    image.format = gray ? PNG_FORMAT_LINEAR_Y : PNG_FORMAT_LINEAR_RGB;
    out.samples.resize(PNG_IMAGE_SIZE(image) / 2);
    if (!png_image_finish_read(&image, nullptr, out.samples.data(), 0, nullptr)) {
      png_image_free(&image);
      throw IoError("cannot decode PNG " + path.string() + ": " + image.message);
    }
  } else {
    image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
    std::vector<std::uint8_t> bytes(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, bytes.data(), 0, nullptr)) {
      png_image_free(&image);
      throw IoError("cannot decode PNG " + path.string() + ": " + image.message);
    }
    out.samples.assign(bytes.begin(), bytes.end());
  }
  return out;
}

}  // namespace foodsynth
