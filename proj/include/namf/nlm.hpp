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

#ifndef NAMF_NLM_HPP_
#define NAMF_NLM_HPP_

#include <vector>

#include "namf/image.hpp"

namespace namf {

// Non-local means refinement restricted to pixels flagged as impulses.
//
// Only flagged pixels are rewritten. Each is replaced by a weighted mean over
// its search window where the weight of a candidate is exp(-d / h^2) and d is
// the kernel-weighted mean squared difference between the two patches. The
// pixel itself never contributes: its weight is zero, including at borders
// where a reflected window position lands back on it.
struct NlmParams {
  int patch_radius = 2;     // 5x5 similarity patches
  int search_radius = 20;   // 41x41 search window
  double beta0 = 4.5595;
  double beta1 = 6.0314;
  double beta2 = 2.2186;
  // Gaussian std over patch offsets; 0 selects uniform patch weights.
  double kernel_sigma = 0.0;

  void Validate() const;
};

// Weights below this sum leave the pixel at its input value.
inline constexpr double kMinWeightSum = 1e-300;

/// Smoothing parameter fitted to the flagged fraction q = |mask| / (M N):
/// h = beta2 q^2 + beta1 q + beta0.
double SmoothingH(const PixelMask& mask, const NlmParams& params);

/// Normalized per-axis patch weights of length 2 * patch_radius + 1. The 2D
/// kernel is their outer product and sums to 1.
std::vector<double> PatchKernel1D(const NlmParams& params);

/// Kernel-weighted squared distance between the patches centered at `a` and
/// `b`. Positions may lie outside the image; every sample resolves through
/// reflect-101.
double PatchDistance(const FloatImage& img, Position a, Position b,
                     const NlmParams& params);

double NlmWeight(double distance, double h, bool is_center);

/// Direct evaluation: one PatchDistance per (pixel, search offset).
FloatImage NlmRestoreNaive(const FloatImage& img, const PixelMask& mask,
                           const NlmParams& params);

/// Same result as NlmRestoreNaive. For each search offset t the squared
/// difference image (img(x) - img(x + t))^2 is built once and filtered with
/// running column and row sums, so a patch distance costs O(1) per pixel and
/// offset instead of O(patch area). `threads` splits the rows into bands;
/// 0 means hardware concurrency. Output does not depend on the thread count.
FloatImage NlmRestoreFast(const FloatImage& img, const PixelMask& mask,
                          const NlmParams& params, int threads = 1);

}  // namespace namf

#endif  // NAMF_NLM_HPP_
