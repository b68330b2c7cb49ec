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

#ifndef NAMF_STAGE1_HPP_
#define NAMF_STAGE1_HPP_

#include "namf/detector.hpp"
#include "namf/image.hpp"

namespace namf {

struct Stage1Output {
  FloatImage restored;  // initial restoration, unquantized
  PixelMask noisy;
  RadiusMap radius;
};

// Mid-gray used when the raster fallback has no usable neighbor at all.
inline constexpr double kFallbackGray = 128.0;

/// Replacement value for the noisy pixel (row, col) of `noisy_input`.
///
/// If the (2r+1)^2 window holds a non-extreme pixel, returns the mean of the
/// input values over window pixels with mask 0. Otherwise returns the mean
/// of the restored values at (row-1, col-1), (row-1, col) and (row, col-1).
/// Those three precede (row, col) in raster order, so `restored` must
/// already be final there. At the top row or left column the neighbors are
/// reflected; reflected neighbors that are still unprocessed noisy pixels
/// are dropped, and if none remain the result is kFallbackGray.
///
/// Throws ContractViolation if mask(row, col) is 0.
double AdaptiveMean(const GrayImage& noisy_input, const FloatImage& restored,
                    const PixelMask& mask, int row, int col, int radius);

/// Detection followed by one raster pass that overwrites each noisy pixel
/// with AdaptiveMean at its detection radius. Sequential by construction:
/// the fallback reads values restored earlier in the same pass.
Stage1Output RestoreStage1(const GrayImage& noisy_input,
                           const DetectorParams& params);

}  // namespace namf

#endif  // NAMF_STAGE1_HPP_
