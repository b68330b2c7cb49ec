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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "namf/metrics.hpp"
#include "test_support.hpp"

namespace namf {
namespace {

// Per-window SSIM written out with explicit loops.
double OracleSsim(const GrayImage& u, const GrayImage& v) {
  const int n = 11;
  std::vector<double> g(n * n);
  double gs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g[i * n + j] = std::exp(-((i - 5) * (i - 5) + (j - 5) * (j - 5)) / 4.5);
      gs += g[i * n + j];
    }
  }
  for (double& w : g) w /= gs;
  const double c1 = 6.5025, c2 = 58.5225;
  double total = 0.0;
  int count = 0;
  for (int r = 0; r + n <= u.height(); ++r) {
    for (int c = 0; c + n <= u.width(); ++c) {
      double mu = 0, mv = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          mu += g[i * n + j] * u(r + i, c + j);
          mv += g[i * n + j] * v(r + i, c + j);
        }
      }
      double su = 0, sv = 0, suv = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double a = u(r + i, c + j) - mu, b = v(r + i, c + j) - mv;
          su += g[i * n + j] * a * a;
          sv += g[i * n + j] * b * b;
          suv += g[i * n + j] * a * b;
        }
      }
      total += (2 * mu * mv + c1) * (2 * suv + c2) /
               ((mu * mu + mv * mv + c1) * (su + sv + c2));
      ++count;
    }
  }
  return total / count;
}

TEST_CASE("mse") {
  const GrayImage a = testing::RandomGray(17, 13, 1);
  CHECK(Mse(a, a) == 0.0);
  CHECK(Mse(GrayImage(8, 8, 0), GrayImage(8, 8, 255)) == 65025.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GrayImage u = testing::RandomGray(23, 9, seed);
    const GrayImage v = testing::RandomGray(23, 9, seed + 100);
    double s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      s += (double(u[k]) - v[k]) * (double(u[k]) - v[k]);
    }
    CHECK(Mse(u, v) == doctest::Approx(s / u.size()).epsilon(1e-12));
    CHECK(Mse(u, v) == Mse(v, u));
  }
}

TEST_CASE("psnr") {
  const GrayImage a = testing::RandomGray(12, 12, 2);
  CHECK(Psnr(a, a) == kInfinitePsnr);
  CHECK(std::isinf(Psnr(a, a)));
  CHECK(Psnr(GrayImage(8, 8, 0), GrayImage(8, 8, 255)) == doctest::Approx(0.0));
  GrayImage b(10, 10, 50);
  GrayImage c = b;
  c[0] = 60;  // MSE = 1
  CHECK(Psnr(b, c) == doctest::Approx(20 * std::log10(255.0)));
}

TEST_CASE("psnr falls as the error grows") {
  const GrayImage ref(16, 16, 100);
  double prev = kInfinitePsnr;
  for (int d = 1; d <= 150; ++d) {
    const GrayImage t(16, 16, static_cast<std::uint8_t>(100 + d));
    const double p = Psnr(ref, t);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("ssim identity and constants") {
  const GrayImage a = testing::RandomGray(40, 33, 3);
  CHECK(Ssim(a, a) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(SsimGlobal(a, a) == doctest::Approx(1.0).epsilon(1e-12));
  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double want = (2.0 * 100 * 110 + c1) / (100.0 * 100 + 110.0 * 110 + c1);
  CHECK(Ssim(GrayImage(32, 32, 100), GrayImage(32, 32, 110)) ==
        doctest::Approx(want).epsilon(1e-12));
  CHECK(SsimGlobal(GrayImage(32, 32, 100), GrayImage(32, 32, 110)) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("ssim matches a direct window loop") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GrayImage u = testing::RandomGray(19 + int(seed), 14, seed);
    GrayImage v = u;
    const GrayImage noise = testing::RandomGray(19 + int(seed), 14, seed + 50, 0, 40);
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] = static_cast<std::uint8_t>(std::min(255, v[k] + noise[k]));
    }
    const double s = Ssim(u, v);
    CHECK(s == doctest::Approx(OracleSsim(u, v)).epsilon(1e-10));
    CHECK(s == doctest::Approx(Ssim(v, u)).epsilon(1e-12));
    CHECK(s <= 1.0);
    CHECK(s >= -1.0);
  }
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(Mse(GrayImage(4, 4), GrayImage(4, 5)), std::invalid_argument);
  CHECK_THROWS_AS(Psnr(GrayImage(4, 4), GrayImage(5, 4)), std::invalid_argument);
  CHECK_THROWS_AS(Ssim(GrayImage(20, 20), GrayImage(20, 21)), std::invalid_argument);
  CHECK_THROWS_AS(Ssim(GrayImage(10, 20), GrayImage(10, 20)), std::invalid_argument);
}

TEST_CASE("evaluate bundles the metrics") {
  const GrayImage a = testing::RandomGray(30, 30, 4);
  const GrayImage b = testing::RandomGray(30, 30, 5);
  const MetricReport r = Evaluate(a, b);
  CHECK(r.mse == Mse(a, b));
  CHECK(r.psnr_db == Psnr(a, b));
  CHECK(r.ssim == Ssim(a, b));
  CHECK(Evaluate(a, b, true).ssim == SsimGlobal(a, b));
}

}  // namespace
}  // namespace namf
