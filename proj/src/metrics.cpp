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

#include "namf/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace namf {
namespace {

void RequireSameShape(const GrayImage& u, const GrayImage& v) {
  if (!u.same_shape(v)) {
    throw std::invalid_argument(
        "dimension mismatch: " + std::to_string(u.width()) + "x" +
        std::to_string(u.height()) + " vs " + std::to_string(v.width()) + "x" +
        std::to_string(v.height()));
  }
}

std::vector<double> GaussianTaps() {
  std::vector<double> g(kSsimWindow);
  const int half = kSsimWindow / 2;
  double sum = 0.0;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double x = i - half;
    g[i] = std::exp(-(x * x) / (2.0 * kSsimSigma * kSsimSigma));
    sum += g[i];
  }
  for (double& t : g) t /= sum;
  return g;
}

// Separable "valid" correlation: output is (h - 10) x (w - 10).
std::vector<double> FilterValid(const std::vector<double>& src, int w, int h,
                                const std::vector<double>& g) {
  const int n = static_cast<int>(g.size());
  const int ow = w - n + 1, oh = h - n + 1;
  std::vector<double> tmp(static_cast<std::size_t>(h) * ow, 0.0);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < ow; ++c) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += g[k] * src[static_cast<std::size_t>(r) * w + c + k];
      tmp[static_cast<std::size_t>(r) * ow + c] = s;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(oh) * ow, 0.0);
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += g[k] * tmp[static_cast<std::size_t>(r + k) * ow + c];
      out[static_cast<std::size_t>(r) * ow + c] = s;
    }
  }
  return out;
}

double SsimFormula(double mu_u, double mu_v, double var_u, double var_v,
                   double cov) {
  return ((2.0 * mu_u * mu_v + kSsimC1) * (2.0 * cov + kSsimC2)) /
         ((mu_u * mu_u + mu_v * mu_v + kSsimC1) * (var_u + var_v + kSsimC2));
}

}  // namespace

double Mse(const GrayImage& u, const GrayImage& v) {
  RequireSameShape(u, v);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = static_cast<double>(u[i]) - v[i];
    sum += d * d;
  }
  return sum / static_cast<double>(u.size());
}

double Psnr(const GrayImage& u, const GrayImage& v) {
  const double mse = Mse(u, v);
  if (mse == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double Ssim(const GrayImage& u, const GrayImage& v) {
  RequireSameShape(u, v);
  if (u.width() < kSsimWindow || u.height() < kSsimWindow) {
    throw std::invalid_argument("SSIM needs images of at least 11x11");
  }
  const int w = u.width(), h = u.height();
  std::vector<double> a(u.size()), b(u.size()), aa(u.size()), bb(u.size()),
      ab(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    a[i] = u[i];
    b[i] = v[i];
    aa[i] = a[i] * a[i];
    bb[i] = b[i] * b[i];
    ab[i] = a[i] * b[i];
  }
  const std::vector<double> g = GaussianTaps();
  const auto mu_a = FilterValid(a, w, h, g);
  const auto mu_b = FilterValid(b, w, h, g);
  const auto e_aa = FilterValid(aa, w, h, g);
  const auto e_bb = FilterValid(bb, w, h, g);
  const auto e_ab = FilterValid(ab, w, h, g);
  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    total += SsimFormula(mu_a[i], mu_b[i], e_aa[i] - mu_a[i] * mu_a[i],
                         e_bb[i] - mu_b[i] * mu_b[i],
                         e_ab[i] - mu_a[i] * mu_b[i]);
  }
  return total / static_cast<double>(mu_a.size());
}

double SsimGlobal(const GrayImage& u, const GrayImage& v) {
  RequireSameShape(u, v);
  const double n = static_cast<double>(u.size());
  double mu_u = 0.0, mu_v = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu_u += u[i];
    mu_v += v[i];
  }
  mu_u /= n;
  mu_v /= n;
  double var_u = 0.0, var_v = 0.0, cov = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double du = u[i] - mu_u, dv = v[i] - mu_v;
    var_u += du * du;
    var_v += dv * dv;
    cov += du * dv;
  }
  return SsimFormula(mu_u, mu_v, var_u / n, var_v / n, cov / n);
}

MetricReport Evaluate(const GrayImage& reference, const GrayImage& test,
                      bool global_ssim) {
  MetricReport r;
  r.mse = Mse(reference, test);
  r.psnr_db = r.mse == 0.0 ? kInfinitePsnr
                           : 10.0 * std::log10(255.0 * 255.0 / r.mse);
  r.ssim = global_ssim ? SsimGlobal(reference, test) : Ssim(reference, test);
  return r;
}

}  // namespace namf
