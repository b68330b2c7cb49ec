// Copyright 2026 The NAMF Authors
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

#ifndef NAMF_IMAGE_HPP_
#define NAMF_IMAGE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace namf {

// Raised for malformed inputs: bad dimensions, unsupported files, I/O failure.
class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside its documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Position {
  int row = 0;
  int col = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct GrayTag {};
struct FloatTag {};
struct MaskTag {};
struct RadiusTag {};

// Row-major raster with a top-left origin. The tag keeps otherwise identical
// element types (8-bit pixels vs. binary mask bits) from mixing.
template <typename T, typename Tag>
class Raster {
 public:
  using value_type = T;

  Raster() = default;

  Raster(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    CheckDims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  Raster(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    CheckDims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height) {
      throw ImageError("pixel count " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(width) + "x" +
                       std::to_string(height));
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(int row, int col) {
    return data_[static_cast<std::size_t>(row) * width_ + col];
  }
  const T& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * width_ + col];
  }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::span<T> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * width_,
            static_cast<std::size_t>(width_)};
  }

  std::span<T> pixels() { return data_; }
  std::span<const T> pixels() const { return data_; }

  bool contains(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }

  template <typename U, typename V>
  bool same_shape(const Raster<U, V>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  static void CheckDims(int width, int height) {
    if (width <= 0 || height <= 0) {
      throw ImageError("image dimensions must be positive, got " +
                       std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

// 8-bit single-channel image; every uint8_t is a valid gray level.
using GrayImage = Raster<std::uint8_t, GrayTag>;
// Real-valued working image; entries must stay finite.
using FloatImage = Raster<double, FloatTag>;
// Binary matrix with entries in {0, 1}.
using PixelMask = Raster<std::uint8_t, MaskTag>;
// Per-pixel window radius map.
using RadiusMap = Raster<int, RadiusTag>;

inline FloatImage ToFloat(const GrayImage& img) {
  FloatImage out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = img[i];
  return out;
}

// Clamps to [0, 255] and rounds half away from zero.
inline GrayImage Quantize(const FloatImage& img) {
  GrayImage out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) {
    double v = img[i];
    v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
    out[i] = static_cast<std::uint8_t>(std::lround(v));
  }
  return out;
}

inline void RequireFinite(const FloatImage& img) {
  for (double v : img.pixels()) {
    if (!std::isfinite(v)) throw ImageError("float image has a non-finite entry");
  }
}

inline std::size_t CountOnes(const PixelMask& mask) {
  std::size_t n = 0;
  for (auto b : mask.pixels()) n += b != 0;
  return n;
}

// Converts a mask to a viewable {0, 255} image.
inline GrayImage MaskToImage(const PixelMask& mask) {
  GrayImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask[i] ? 255 : 0;
  return out;
}

}  // namespace namf

#endif  // NAMF_IMAGE_HPP_
