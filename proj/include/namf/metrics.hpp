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

#ifndef NAMF_METRICS_HPP_
#define NAMF_METRICS_HPP_

#include <limits>

#include "namf/image.hpp"

namespace namf {

// PSNR of identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimC1 = (0.01 * 255) * (0.01 * 255);
inline constexpr double kSsimC2 = (0.03 * 255) * (0.03 * 255);

struct MetricReport {
  double mse = 0.0;
  double psnr_db = kInfinitePsnr;
  double ssim = 1.0;
  double runtime_ms = 0.0;
};

// All comparisons throw std::invalid_argument on a dimension mismatch.
double Mse(const GrayImage& u, const GrayImage& v);

// 10 log10(255^2 / MSE); kInfinitePsnr when the images are identical.
double Psnr(const GrayImage& u, const GrayImage& v);

/// Mean SSIM over every fully contained 11x11 window, each window's
/// statistics weighted by a normalized Gaussian with sigma 1.5. Images must
/// be at least 11x11.
double Ssim(const GrayImage& u, const GrayImage& v);

/// The SSIM formula evaluated once with whole-image means, variances and
/// covariance.
double SsimGlobal(const GrayImage& u, const GrayImage& v);

MetricReport Evaluate(const GrayImage& reference, const GrayImage& test,
                      bool global_ssim = false);

}  // namespace namf

#endif  // NAMF_METRICS_HPP_
