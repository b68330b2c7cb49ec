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

#ifndef NAMF_PIPELINE_HPP_
#define NAMF_PIPELINE_HPP_

#include <string>
#include <string_view>

#include "namf/detector.hpp"
#include "namf/image.hpp"
#include "namf/nlm.hpp"
#include "namf/stage1.hpp"

namespace namf {

struct NamfOutput {
  GrayImage image;       // final 8-bit result
  Stage1Output stage1;   // initial restoration, mask and radii
  double h = 0.0;        // smoothing parameter used by the refinement
  FloatImage refined;    // refinement output before quantization
};

/// Full two-stage restoration: adaptive-window detection with mean
/// replacement, then non-local means over the flagged pixels with h fitted
/// to the flagged fraction. Quantization happens once, at the end.
NamfOutput RunNamf(const GrayImage& noisy, const DetectorParams& detector,
                   const NlmParams& nlm, int threads = 1);

GrayImage Namf(const GrayImage& noisy, const DetectorParams& detector = {},
               const NlmParams& nlm = {}, int threads = 1);

enum class Method { kNamf, kMedian };

// "namf" or "mf"; throws std::invalid_argument otherwise.
Method ParseMethod(std::string_view name);
std::string MethodName(Method m);

}  // namespace namf

#endif  // NAMF_PIPELINE_HPP_
