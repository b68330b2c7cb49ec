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

#include "namf/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "namf/image_io.hpp"
#include "namf/median.hpp"
#include "namf/metrics.hpp"
#include "namf/noise.hpp"
#include "namf/pipeline.hpp"
#include "namf/sweep.hpp"

namespace namf {
namespace {

// Thrown for problems the user can fix by changing the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireFile(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw UsageError("input file not found: " + path);
  }
}

struct InjectArgs {
  std::string input, output, mask;
  double density = -1.0;
  double salt_fraction = 0.5;
  std::uint64_t seed = 0;
};

struct DenoiseArgs {
  std::string method = "namf", input, output, dump_mask;
  DetectorParams detector;
  NlmParams nlm;
  int threads = 1;
};

struct MetricsArgs {
  std::string reference, test;
  bool global_ssim = false;
};

struct SweepArgs {
  std::string config, output, images, densities, methods;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool no_timing = false;
};

void AddDetectorFlags(CLI::App* cmd, DetectorParams& p) {
  cmd->add_option("--threshold", p.threshold, "texture proportion threshold T");
  cmd->add_option("--w-max", p.w_max, "largest detection window radius");
  cmd->add_option("--w-step", p.w_step, "detection radius increment");
}

void AddNlmFlags(CLI::App* cmd, NlmParams& p) {
  cmd->add_option("--patch-radius", p.patch_radius, "similarity patch radius");
  cmd->add_option("--search-radius", p.search_radius, "search window radius");
  cmd->add_option("--beta0", p.beta0);
  cmd->add_option("--beta1", p.beta1);
  cmd->add_option("--beta2", p.beta2);
  cmd->add_option("--kernel-sigma", p.kernel_sigma,
                  "Gaussian std over patch offsets (0 = uniform)");
}

int RunInject(const InjectArgs& a, std::ostream& out) {
  if (!(a.density >= 0.0 && a.density <= 1.0)) {
    throw UsageError("density must be in [0,1]");
  }
  if (!(a.salt_fraction >= 0.0 && a.salt_fraction <= 1.0)) {
    throw UsageError("salt fraction must be in [0,1]");
  }
  RequireFile(a.input);
  const GrayImage clean = LoadImage(a.input);
  const NoisyImage noisy = InjectSap(clean, {a.density, a.salt_fraction, a.seed});
  SaveImage(noisy.noisy, a.output);
  if (!a.mask.empty()) SaveImage(MaskToImage(noisy.truth), a.mask);
  out << "corrupted " << CountOnes(noisy.truth) << " of " << clean.size()
      << " pixels\n";
  return kExitOk;
}

int RunDenoise(const DenoiseArgs& a, std::ostream& out) {
  Method method;
  try {
    method = ParseMethod(a.method);
    a.detector.Validate();
    a.nlm.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  RequireFile(a.input);
  const GrayImage noisy = LoadImage(a.input);
  const auto start = std::chrono::steady_clock::now();
  GrayImage restored;
  if (method == Method::kNamf) {
    NamfOutput res = RunNamf(noisy, a.detector, a.nlm, a.threads);
    if (!a.dump_mask.empty()) SaveImage(MaskToImage(res.stage1.noisy), a.dump_mask);
    out << "flagged " << CountOnes(res.stage1.noisy) << " pixels, h = " << res.h
        << '\n';
    restored = std::move(res.image);
  } else {
    if (!a.dump_mask.empty()) {
      throw UsageError("--dump-mask is only available for --method namf");
    }
    restored = MedianFilter(noisy);
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  SaveImage(restored, a.output);
  out << "runtime_ms " << ms << '\n';
  return kExitOk;
}

int RunMetrics(const MetricsArgs& a, std::ostream& out) {
  RequireFile(a.reference);
  RequireFile(a.test);
  const GrayImage ref = LoadImage(a.reference);
  const GrayImage test = LoadImage(a.test);
  if (!ref.same_shape(test)) throw UsageError("images differ in size");
  const MetricReport r = Evaluate(ref, test, a.global_ssim);
  char line[160];
  std::snprintf(line, sizeof(line), "mse %.6f\npsnr_db %.4f\nssim %.6f\n",
                r.mse, r.psnr_db, r.ssim);
  out << line;
  return kExitOk;
}

int RunSweepCommand(const SweepArgs& a, std::ostream& out) {
  RunConfig cfg;
  try {
    if (!a.config.empty()) {
      RequireFile(a.config);
      cfg = LoadRunConfig(a.config);
    }
    if (!a.images.empty()) ApplyConfigEntry(cfg, "images", a.images);
    if (!a.densities.empty()) ApplyConfigEntry(cfg, "densities", a.densities);
    if (!a.methods.empty()) ApplyConfigEntry(cfg, "methods", a.methods);
    if (!a.output.empty()) ApplyConfigEntry(cfg, "output", a.output);
    if (a.seed) cfg.seed = *a.seed;
    if (a.threads) cfg.threads = *a.threads;
    if (a.no_timing) cfg.timing = false;
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& img : cfg.images) RequireFile(img.string());
  const auto rows = RunSweep(cfg);
  out << "wrote " << rows.size() << " rows to " << cfg.output_csv.string()
      << '\n';
  return kExitOk;
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Salt-and-pepper noise removal and benchmarking", "namf"};
  app.require_subcommand(1);

  InjectArgs inject;
  auto* inject_cmd = app.add_subcommand("inject", "add salt-and-pepper noise");
  inject_cmd->add_option("--input,-i", inject.input, "clean image")->required();
  inject_cmd->add_option("--output,-o", inject.output, "noisy image")->required();
  inject_cmd->add_option("--density,-d", inject.density, "noise density in [0,1]")
      ->required();
  inject_cmd->add_option("--salt-fraction", inject.salt_fraction,
                         "share of corrupted pixels set to 255");
  inject_cmd->add_option("--seed", inject.seed);
  inject_cmd->add_option("--mask", inject.mask,
                         "write the corrupted-pixel mask as a {0,255} image");

  DenoiseArgs denoise;
  auto* denoise_cmd = app.add_subcommand("denoise", "restore a noisy image");
  denoise_cmd->add_option("--method,-m", denoise.method, "namf or mf");
  denoise_cmd->add_option("--input,-i", denoise.input)->required();
  denoise_cmd->add_option("--output,-o", denoise.output)->required();
  denoise_cmd->add_option("--dump-mask", denoise.dump_mask,
                          "write the detected-noise mask as a {0,255} image");
  denoise_cmd->add_option("--threads", denoise.threads,
                          "worker threads for the refinement (0 = all cores)");
  AddDetectorFlags(denoise_cmd, denoise.detector);
  AddNlmFlags(denoise_cmd, denoise.nlm);

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "compare two images");
  metrics_cmd->add_option("reference", metrics.reference)->required();
  metrics_cmd->add_option("test", metrics.test)->required();
  metrics_cmd->add_flag("--ssim-global", metrics.global_ssim,
                        "single whole-image SSIM instead of windowed");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "density sweep to CSV");
  sweep_cmd->add_option("--config,-c", sweep.config, "key = value config file");
  sweep_cmd->add_option("--images", sweep.images, "comma-separated image list");
  sweep_cmd->add_option("--densities", sweep.densities, "comma-separated densities");
  sweep_cmd->add_option("--methods", sweep.methods, "comma-separated: namf,mf");
  sweep_cmd->add_option("--output,-o", sweep.output, "CSV path");
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_option("--threads", sweep.threads);
  sweep_cmd->add_flag("--no-timing", sweep.no_timing,
                      "write runtime_ms as 0 for byte-identical reruns");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (inject_cmd->parsed()) return RunInject(inject, out);
    if (denoise_cmd->parsed()) return RunDenoise(denoise, out);
    if (metrics_cmd->parsed()) return RunMetrics(metrics, out);
    if (sweep_cmd->parsed()) return RunSweepCommand(sweep, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace namf
