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

#include "namf/sweep.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "namf/image_io.hpp"
#include "namf/median.hpp"
#include "namf/metrics.hpp"
#include "namf/noise.hpp"

namespace namf {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = s.find(',');
    const std::string_view item = Trim(s.substr(0, comma));
    if (!item.empty()) parts.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad value for '" + std::string(key) +
                                "': '" + std::string(text) + "'");
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument("bad boolean for '" + std::string(key) + "'");
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              std::string_view p) {
  std::filesystem::path path{std::string(p)};
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

void RunConfig::Validate() const {
  if (images.empty()) throw std::invalid_argument("no images configured");
  if (densities.empty()) throw std::invalid_argument("no densities configured");
  for (double a : densities) {
    if (!(a > 0.0 && a <= 1.0)) {
      throw std::invalid_argument("densities must lie in (0,1], got " +
                                  Format("%g", a));
    }
  }
  if (methods.empty()) throw std::invalid_argument("no methods configured");
  if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0)) {
    throw std::invalid_argument("salt fraction must be in [0,1]");
  }
  detector.Validate();
  nlm.Validate();
}

void ApplyConfigEntry(RunConfig& cfg, std::string_view key,
                      std::string_view value,
                      const std::filesystem::path& base_dir) {
  value = Trim(value);
  if (key == "images") {
    cfg.images.clear();
    for (auto item : SplitList(value)) cfg.images.push_back(Resolve(base_dir, item));
  } else if (key == "densities") {
    cfg.densities.clear();
    for (auto item : SplitList(value)) {
      cfg.densities.push_back(ParseNumber<double>(key, item));
    }
  } else if (key == "methods") {
    cfg.methods.clear();
    for (auto item : SplitList(value)) cfg.methods.push_back(ParseMethod(item));
  } else if (key == "seed") {
    cfg.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "output") {
    cfg.output_csv = Resolve(base_dir, value);
  } else if (key == "threads") {
    cfg.threads = ParseNumber<int>(key, value);
  } else if (key == "timing") {
    cfg.timing = ParseBool(key, value);
  } else if (key == "ssim") {
    if (value != "window" && value != "global") {
      throw std::invalid_argument("ssim must be 'window' or 'global'");
    }
    cfg.global_ssim = value == "global";
  } else if (key == "salt_fraction") {
    cfg.salt_fraction = ParseNumber<double>(key, value);
  } else if (key == "threshold") {
    cfg.detector.threshold = ParseNumber<double>(key, value);
  } else if (key == "w_max") {
    cfg.detector.w_max = ParseNumber<int>(key, value);
  } else if (key == "w_step") {
    cfg.detector.w_step = ParseNumber<int>(key, value);
  } else if (key == "patch_radius") {
    cfg.nlm.patch_radius = ParseNumber<int>(key, value);
  } else if (key == "search_radius") {
    cfg.nlm.search_radius = ParseNumber<int>(key, value);
  } else if (key == "beta0") {
    cfg.nlm.beta0 = ParseNumber<double>(key, value);
  } else if (key == "beta1") {
    cfg.nlm.beta1 = ParseNumber<double>(key, value);
  } else if (key == "beta2") {
    cfg.nlm.beta2 = ParseNumber<double>(key, value);
  } else if (key == "kernel_sigma") {
    cfg.nlm.kernel_sigma = ParseNumber<double>(key, value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ImageError(path.string() + ": cannot open config file");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    try {
      ApplyConfigEntry(cfg, Trim(view.substr(0, eq)), view.substr(eq + 1),
                       path.parent_path());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  return cfg;
}

std::uint64_t DeriveSeed(std::uint64_t base, std::string_view image_id,
                         double alpha) {
  const auto alpha_key = static_cast<std::uint64_t>(std::llround(alpha * 1e6));
  std::uint64_t h = Mix64(base);
  h = Mix64(h ^ Fnv1a(image_id));
  return Mix64(h ^ alpha_key);
}

std::string Sha256Hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError(path.string() + ": cannot open file for hashing");
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

std::string FormatCsvRow(const SweepRow& row) {
  std::ostringstream os;
  os << row.image << ',' << row.method << ',' << Format("%g", row.alpha) << ','
     << Format("%.4f", row.psnr_db) << ',' << Format("%.6f", row.ssim) << ','
     << Format("%.3f", row.runtime_ms) << ',' << row.seed;
  return os.str();
}

std::vector<SweepRow> RunSweep(const RunConfig& cfg) {
  cfg.Validate();
  using Clock = std::chrono::steady_clock;
  std::vector<SweepRow> rows;
  std::vector<std::string> meta;
  meta.push_back("# namf density sweep");
  meta.push_back("# base_seed " + std::to_string(cfg.seed));

  for (const auto& path : cfg.images) {
    const std::string id = path.stem().string();
    GrayImage clean;
    std::string error;
    try {
      clean = LoadImage(path);
      meta.push_back("# sha256 " + Sha256Hex(path) + " " + path.filename().string());
    } catch (const std::exception& e) {
      error = e.what();
      meta.push_back("# error " + id + ": " + error);
    }
    for (double alpha : cfg.densities) {
      const std::uint64_t seed = DeriveSeed(cfg.seed, id, alpha);
      NoisyImage noisy;
      if (error.empty()) noisy = InjectSap(clean, {alpha, cfg.salt_fraction, seed});
      for (Method method : cfg.methods) {
        SweepRow row{id, MethodName(method), alpha, NAN, NAN, 0.0, seed};
        if (error.empty()) {
          const auto start = Clock::now();
          const GrayImage restored =
              method == Method::kNamf
                  ? Namf(noisy.noisy, cfg.detector, cfg.nlm, cfg.threads)
                  : MedianFilter(noisy.noisy);
          const double ms =
              std::chrono::duration<double, std::milli>(Clock::now() - start).count();
          const MetricReport rep = Evaluate(clean, restored, cfg.global_ssim);
          row.psnr_db = rep.psnr_db;
          row.ssim = rep.ssim;
          row.runtime_ms = cfg.timing ? ms : 0.0;
        }
        rows.push_back(row);
      }
    }
  }

  std::filesystem::path tmp = cfg.output_csv;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ImageError(tmp.string() + ": cannot open for writing");
    for (const auto& m : meta) out << m << '\n';
    out << kCsvHeader << '\n';
    for (const auto& row : rows) out << FormatCsvRow(row) << '\n';
    out.flush();
    if (!out) throw ImageError(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, cfg.output_csv);
  return rows;
}

}  // namespace namf
