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

#ifndef NAMF_DETECTOR_HPP_
#define NAMF_DETECTOR_HPP_

#include <cstdint>

#include "namf/image.hpp"

namespace namf {

// Impulse detection with a growing square window. A candidate (value 0 or
// 255) is noisy as soon as its window holds any non-extreme pixel. If the
// window reaches its cap without one, the candidate is kept as texture when
// the share of window pixels equal to it exceeds `threshold`.
struct DetectorParams {
  int w_max = 7;            // largest window radius
  int w_step = 1;           // radius increment between tries
  double threshold = 0.8;   // proportion above which a candidate is texture

  void Validate() const;
};

struct WindowStats {
  int non_extreme = 0;  // pixels that are neither 0 nor 255
  int same_value = 0;   // pixels equal to the center, center included
};

struct PixelVerdict {
  bool is_noisy = false;
  int radius = 0;
};

struct DetectionResult {
  PixelMask noisy;      // discriminant matrix
  RadiusMap radius;     // window radius used; 0 for non-candidates
};

constexpr bool IsExtreme(std::uint8_t v) { return v == 0 || v == 255; }

PixelMask CandidateMask(const GrayImage& img);

// Counts over the (2w+1)^2 window centered at (row, col); out-of-range
// positions resolve through reflect-101.
WindowStats CountWindow(const GrayImage& img, int row, int col, int radius);

// Classifies one candidate pixel. Throws ContractViolation if the pixel is
// not 0 or 255.
PixelVerdict DetectPixel(const GrayImage& img, int row, int col,
                         const DetectorParams& params);

// Classifies every pixel. Window counts come from integral images so each
// window query is O(1).
DetectionResult Detect(const GrayImage& img, const DetectorParams& params);

}  // namespace namf

#endif  // NAMF_DETECTOR_HPP_
