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

#ifndef NAMF_SWEEP_HPP_
#define NAMF_SWEEP_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "namf/detector.hpp"
#include "namf/nlm.hpp"
#include "namf/pipeline.hpp"

namespace namf {

// Density sweep settings.
//
// Config files are flat "key = value" text. Blank lines and lines starting
// with '#' are ignored; list values are comma separated. Relative image and
// output paths are resolved against the config file's directory. Keys:
//
//   images, densities, methods, seed, output, threads, timing (true|false),
//   ssim (window|global), salt_fraction, threshold, w_max, w_step,
//   patch_radius, search_radius, beta0, beta1, beta2, kernel_sigma
struct RunConfig {
  std::vector<std::filesystem::path> images;
  std::vector<double> densities = {0.1, 0.2, 0.3, 0.4, 0.5,
                                   0.6, 0.7, 0.8, 0.9};
  std::vector<Method> methods = {Method::kNamf, Method::kMedian};
  std::uint64_t seed = 0;
  std::filesystem::path output_csv = "sweep.csv";
  DetectorParams detector;
  NlmParams nlm;
  double salt_fraction = 0.5;
  int threads = 1;
  // When false, runtime_ms is written as 0 so reruns are byte-identical.
  bool timing = true;
  bool global_ssim = false;

  void Validate() const;
};

struct SweepRow {
  std::string image;
  std::string method;
  double alpha = 0.0;
  double psnr_db = 0.0;
  double ssim = 0.0;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kCsvHeader =
    "image,method,alpha,psnr_db,ssim,runtime_ms,seed";

// Sets one key; throws std::invalid_argument on an unknown key or bad value.
void ApplyConfigEntry(RunConfig& cfg, std::string_view key,
                      std::string_view value,
                      const std::filesystem::path& base_dir = {});

RunConfig LoadRunConfig(const std::filesystem::path& path);

// Noise seed for one (image, density) cell; independent of the method so
// every method sees the same corrupted input.
std::uint64_t DeriveSeed(std::uint64_t base, std::string_view image_id,
                         double alpha);

std::string Sha256Hex(const std::filesystem::path& path);

/// Runs every (image, density, method) cell in that nesting order and writes
/// the CSV atomically (temporary file, then rename). An image that cannot be
/// loaded yields rows with NaN metrics plus an "# error" metadata line; the
/// sweep carries on with the next image.
std::vector<SweepRow> RunSweep(const RunConfig& cfg);

std::string FormatCsvRow(const SweepRow& row);

}  // namespace namf

#endif  // NAMF_SWEEP_HPP_
