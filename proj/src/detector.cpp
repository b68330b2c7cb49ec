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

#include "namf/detector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "namf/padding.hpp"

namespace namf {
namespace {

// Summed-area tables of the non-extreme, zero and 255 indicators over the
// image extended by `pad` pixels of reflection.
class IntegralCounter {
 public:
  IntegralCounter(const GrayImage& img, int pad)
      : img_(img), pad_(pad), stride_(img.width() + 2 * pad + 1) {
    const GrayImage ext = ExtendReflect(img, pad);
    const std::size_t cells =
        static_cast<std::size_t>(stride_) * (ext.height() + 1);
    non_extreme_.assign(cells, 0);
    zeros_.assign(cells, 0);
    maxes_.assign(cells, 0);
    for (int r = 0; r < ext.height(); ++r) {
      int row_ne = 0, row_z = 0, row_m = 0;
      for (int c = 0; c < ext.width(); ++c) {
        const std::uint8_t v = ext(r, c);
        row_ne += !IsExtreme(v);
        row_z += v == 0;
        row_m += v == 255;
        const std::size_t at = Index(r + 1, c + 1);
        const std::size_t up = Index(r, c + 1);
        non_extreme_[at] = non_extreme_[up] + row_ne;
        zeros_[at] = zeros_[up] + row_z;
        maxes_[at] = maxes_[up] + row_m;
      }
    }
  }

  WindowStats operator()(int row, int col, int radius) const {
    const int r0 = row + pad_ - radius, r1 = row + pad_ + radius + 1;
    const int c0 = col + pad_ - radius, c1 = col + pad_ + radius + 1;
    const std::uint8_t center = img_(row, col);
    WindowStats s;
    s.non_extreme = Box(non_extreme_, r0, c0, r1, c1);
    if (center == 0) {
      s.same_value = Box(zeros_, r0, c0, r1, c1);
    } else if (center == 255) {
      s.same_value = Box(maxes_, r0, c0, r1, c1);
    } else {
      s.same_value = CountWindow(img_, row, col, radius).same_value;
    }
    return s;
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * stride_ + c;
  }
  int Box(const std::vector<int>& t, int r0, int c0, int r1, int c1) const {
    return t[Index(r1, c1)] - t[Index(r0, c1)] - t[Index(r1, c0)] +
           t[Index(r0, c0)];
  }

  const GrayImage& img_;
  int pad_;
  int stride_;
  std::vector<int> non_extreme_, zeros_, maxes_;
};

struct DirectCounter {
  const GrayImage& img;
  WindowStats operator()(int row, int col, int radius) const {
    return CountWindow(img, row, col, radius);
  }
};

template <typename Counter>
PixelVerdict Classify(const Counter& count, int row, int col,
                      const DetectorParams& p) {
  int w = 1;
  WindowStats s = count(row, col, w);
  while (s.non_extreme == 0 && w < p.w_max) {
    w = std::min(w + p.w_step, p.w_max);
    s = count(row, col, w);
  }
  if (s.non_extreme > 0) return {true, w};
  const double side = 2.0 * w + 1.0;
  const double rho = s.same_value / (side * side);
  return {rho <= p.threshold, w};
}

}  // namespace

void DetectorParams::Validate() const {
  if (w_max < 1) throw std::invalid_argument("w_max must be >= 1");
  if (w_step < 1 || w_step > w_max) {
    throw std::invalid_argument("w_step must be in [1, w_max]");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must be in [0,1]");
  }
}

PixelMask CandidateMask(const GrayImage& img) {
  PixelMask mask(img.width(), img.height(), 0);
  for (std::size_t i = 0; i < img.size(); ++i) mask[i] = IsExtreme(img[i]);
  return mask;
}

WindowStats CountWindow(const GrayImage& img, int row, int col, int radius) {
  const std::uint8_t center = img(row, col);
  WindowStats s;
  for (int dr = -radius; dr <= radius; ++dr) {
    const int r = ReflectIndex(row + dr, img.height());
    for (int dc = -radius; dc <= radius; ++dc) {
      const std::uint8_t v = img(r, ReflectIndex(col + dc, img.width()));
      s.non_extreme += !IsExtreme(v);
      s.same_value += v == center;
    }
  }
  return s;
}

PixelVerdict DetectPixel(const GrayImage& img, int row, int col,
                         const DetectorParams& params) {
  params.Validate();
  if (!img.contains(row, col)) {
    throw ContractViolation("DetectPixel: position out of bounds");
  }
  if (!IsExtreme(img(row, col))) {
    throw ContractViolation("DetectPixel called on a non-candidate pixel (" +
                            std::to_string(row) + ", " + std::to_string(col) +
                            ")");
  }
  return Classify(DirectCounter{img}, row, col, params);
}

DetectionResult Detect(const GrayImage& img, const DetectorParams& params) {
  params.Validate();
  DetectionResult out{PixelMask(img.width(), img.height(), 0),
                      RadiusMap(img.width(), img.height(), 0)};
  const IntegralCounter counter(img, params.w_max);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!IsExtreme(img(r, c))) continue;
      const PixelVerdict v = Classify(counter, r, c, params);
      out.noisy(r, c) = v.is_noisy;
      out.radius(r, c) = v.radius;
    }
  }
  return out;
}

}  // namespace namf
