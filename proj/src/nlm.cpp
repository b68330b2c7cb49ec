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

#include "namf/nlm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "namf/padding.hpp"

namespace namf {
namespace {

double CheckedH(const PixelMask& mask, const NlmParams& params) {
  const double h = SmoothingH(mask, params);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("smoothing parameter h must be positive, got " +
                                std::to_string(h));
  }
  return h;
}

void CheckInputs(const FloatImage& img, const PixelMask& mask,
                 const NlmParams& params) {
  params.Validate();
  if (!img.same_shape(mask)) {
    throw std::invalid_argument("image and mask dimensions differ");
  }
  RequireFinite(img);
}

// Restores the rows [row_begin, row_end) of `out`. `ext` is the input
// extended by search_radius + patch_radius on each side.
class BandRestorer {
 public:
  BandRestorer(const FloatImage& img, const FloatImage& ext,
               const PixelMask& mask, const NlmParams& params, double h)
      : img_(img),
        ext_(ext),
        mask_(mask),
        pr_(params.patch_radius),
        sr_(params.search_radius),
        pad_(params.search_radius + params.patch_radius),
        uniform_(params.kernel_sigma == 0.0),
        kernel_(PatchKernel1D(params)),
        inv_h2_(1.0 / (h * h)) {}

  void Run(int row_begin, int row_end, FloatImage& out) const {
    const int width = img_.width();
    const int band = row_end - row_begin;
    const int taps = 2 * pr_ + 1;
    const int span = width + 2 * pr_;  // columns -pr .. width + pr - 1

    std::vector<char> row_has_work(band, 0);
    for (int y = row_begin; y < row_end; ++y) {
      for (int x = 0; x < width && !row_has_work[y - row_begin]; ++x) {
        row_has_work[y - row_begin] = mask_(y, x) != 0;
      }
    }
    if (std::none_of(row_has_work.begin(), row_has_work.end(),
                     [](char c) { return c != 0; })) {
      for (int y = row_begin; y < row_end; ++y) {
        std::copy(img_.row(y).begin(), img_.row(y).end(), out.row(y).begin());
      }
      return;
    }

    std::vector<double> num(static_cast<std::size_t>(band) * width, 0.0);
    std::vector<double> den(num.size(), 0.0);
    // Ring of the last `taps` squared-difference rows. Column sums are rebuilt
    // from it per row rather than updated incrementally so that rounding does
    // not depend on where a band starts.
    std::vector<double> ring(static_cast<std::size_t>(taps) * span);
    std::vector<double> column(span);
    std::vector<double> dist(width);

    for (int dy = -sr_; dy <= sr_; ++dy) {
      for (int dx = -sr_; dx <= sr_; ++dx) {
        if (dy == 0 && dx == 0) continue;
        for (int k = -pr_; k < pr_; ++k) {
          FillDiffRow(row_begin + k, dy, dx, RingRow(ring, span, row_begin + k));
        }
        for (int y = row_begin; y < row_end; ++y) {
          FillDiffRow(y + pr_, dy, dx, RingRow(ring, span, y + pr_));
          if (!row_has_work[y - row_begin]) continue;
          ColumnSums(ring, span, y, column);
          RowDistances(column, dist);
          Accumulate(y, dy, dx, dist, row_begin, num, den);
        }
      }
    }

    for (int y = row_begin; y < row_end; ++y) {
      for (int x = 0; x < width; ++x) {
        const std::size_t at = static_cast<std::size_t>(y - row_begin) * width + x;
        out(y, x) = mask_(y, x) && den[at] > kMinWeightSum ? num[at] / den[at]
                                                           : img_(y, x);
      }
    }
  }

 private:
  double* RingRow(std::vector<double>& ring, int span, int y) const {
    const int taps = 2 * pr_ + 1;
    const int slot = ((y % taps) + taps) % taps;
    return ring.data() + static_cast<std::size_t>(slot) * span;
  }
  const double* RingRow(const std::vector<double>& ring, int span, int y) const {
    return RingRow(const_cast<std::vector<double>&>(ring), span, y);
  }

  // (img(y, x) - img(y + dy, x + dx))^2 for x in [-pr, width + pr).
  void FillDiffRow(int y, int dy, int dx, double* dst) const {
    const double* a = &ext_(y + pad_, pad_ - pr_);
    const double* b = &ext_(y + pad_ + dy, pad_ - pr_ + dx);
    const int span = img_.width() + 2 * pr_;
    for (int i = 0; i < span; ++i) {
      const double d = a[i] - b[i];
      dst[i] = d * d;
    }
  }

  // Kernel-weighted sum over the `taps` ring rows centered on y.
  void ColumnSums(const std::vector<double>& ring, int span, int y,
                  std::vector<double>& column) const {
    const int taps = 2 * pr_ + 1;
    std::copy_n(RingRow(ring, span, y - pr_), span, column.begin());
    if (!uniform_) {
      for (int i = 0; i < span; ++i) column[i] *= kernel_[0];
    }
    for (int k = 1; k < taps; ++k) {
      const double* row = RingRow(ring, span, y - pr_ + k);
      if (uniform_) {
        for (int i = 0; i < span; ++i) column[i] += row[i];
      } else {
        for (int i = 0; i < span; ++i) column[i] += kernel_[k] * row[i];
      }
    }
  }

  void RowDistances(const std::vector<double>& column,
                    std::vector<double>& dist) const {
    const int taps = 2 * pr_ + 1;
    if (!uniform_) {
      for (int x = 0; x < img_.width(); ++x) {
        double d = 0.0;
        for (int k = 0; k < taps; ++k) d += kernel_[k] * column[x + k];
        dist[x] = d;
      }
      return;
    }
    const double scale = 1.0 / (static_cast<double>(taps) * taps);
    double run = 0.0;
    for (int i = 0; i < taps; ++i) run += column[i];
    dist[0] = run * scale;
    for (int x = 1; x < img_.width(); ++x) {
      run += column[x + taps - 1] - column[x - 1];
      dist[x] = run * scale;
    }
  }

  void Accumulate(int y, int dy, int dx, const std::vector<double>& dist,
                  int row_begin, std::vector<double>& num,
                  std::vector<double>& den) const {
    const int width = img_.width();
    const bool row_folds = ReflectIndex(y + dy, img_.height()) == y;
    const double* sample = &ext_(y + pad_ + dy, pad_ + dx);
    const std::size_t base = static_cast<std::size_t>(y - row_begin) * width;
    for (int x = 0; x < width; ++x) {
      if (!mask_(y, x)) continue;
      if (row_folds && ReflectIndex(x + dx, width) == x) continue;
      const double w = std::exp(-dist[x] * inv_h2_);
      num[base + x] += w * sample[x];
      den[base + x] += w;
    }
  }

  const FloatImage& img_;
  const FloatImage& ext_;
  const PixelMask& mask_;
  int pr_, sr_, pad_;
  bool uniform_;
  std::vector<double> kernel_;
  double inv_h2_;
};

}  // namespace

void NlmParams::Validate() const {
  if (patch_radius < 1) throw std::invalid_argument("patch_radius must be >= 1");
  if (search_radius < patch_radius) {
    throw std::invalid_argument("search_radius must be >= patch_radius");
  }
  if (!std::isfinite(beta0) || !std::isfinite(beta1) || !std::isfinite(beta2)) {
    throw std::invalid_argument("beta coefficients must be finite");
  }
  if (!(kernel_sigma >= 0.0) || !std::isfinite(kernel_sigma)) {
    throw std::invalid_argument("kernel_sigma must be a finite value >= 0");
  }
}

double SmoothingH(const PixelMask& mask, const NlmParams& params) {
  const double q =
      static_cast<double>(CountOnes(mask)) / static_cast<double>(mask.size());
  return q * q * params.beta2 + q * params.beta1 + params.beta0;
}

std::vector<double> PatchKernel1D(const NlmParams& params) {
  const int r = params.patch_radius;
  std::vector<double> k(2 * r + 1, 1.0);
  if (params.kernel_sigma > 0.0) {
    const double s2 = 2.0 * params.kernel_sigma * params.kernel_sigma;
    for (int i = -r; i <= r; ++i) k[i + r] = std::exp(-(i * i) / s2);
  }
  double sum = 0.0;
  for (double v : k) sum += v;
  for (double& v : k) v /= sum;
  return k;
}

double PatchDistance(const FloatImage& img, Position a, Position b,
                     const NlmParams& params) {
  const std::vector<double> k = PatchKernel1D(params);
  const int r = params.patch_radius;
  double d = 0.0;
  for (int i = -r; i <= r; ++i) {
    const int ra = ReflectIndex(a.row + i, img.height());
    const int rb = ReflectIndex(b.row + i, img.height());
    for (int j = -r; j <= r; ++j) {
      const double diff = img(ra, ReflectIndex(a.col + j, img.width())) -
                          img(rb, ReflectIndex(b.col + j, img.width()));
      d += k[i + r] * k[j + r] * diff * diff;
    }
  }
  return d;
}

double NlmWeight(double distance, double h, bool is_center) {
  if (is_center) return 0.0;
  return std::exp(-distance / (h * h));
}

FloatImage NlmRestoreNaive(const FloatImage& img, const PixelMask& mask,
                           const NlmParams& params) {
  CheckInputs(img, mask, params);
  const double h = CheckedH(mask, params);
  const int sr = params.search_radius;
  FloatImage out = img;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!mask(y, x)) continue;
      double num = 0.0, den = 0.0;
      for (int dy = -sr; dy <= sr; ++dy) {
        const int sy = ReflectIndex(y + dy, img.height());
        for (int dx = -sr; dx <= sr; ++dx) {
          const int sx = ReflectIndex(x + dx, img.width());
          const bool is_center = sy == y && sx == x;
          const double d =
              PatchDistance(img, {y, x}, {y + dy, x + dx}, params);
          const double w = NlmWeight(d, h, is_center);
          num += w * img(sy, sx);
          den += w;
        }
      }
      if (den > kMinWeightSum) out(y, x) = num / den;
    }
  }
  return out;
}

FloatImage NlmRestoreFast(const FloatImage& img, const PixelMask& mask,
                          const NlmParams& params, int threads) {
  CheckInputs(img, mask, params);
  const double h = CheckedH(mask, params);
  if (CountOnes(mask) == 0) return img;

  const FloatImage ext =
      ExtendReflect(img, params.search_radius + params.patch_radius);
  const BandRestorer restorer(img, ext, mask, params, h);
  FloatImage out(img.width(), img.height());

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, img.height());
  if (threads == 1) {
    restorer.Run(0, img.height(), out);
    return out;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const int begin = static_cast<int>(static_cast<long>(img.height()) * t / threads);
    const int end = static_cast<int>(static_cast<long>(img.height()) * (t + 1) / threads);
    workers.emplace_back([&restorer, &out, begin, end] {
      restorer.Run(begin, end, out);
    });
  }
  workers.clear();  // joins
  return out;
}

}  // namespace namf
