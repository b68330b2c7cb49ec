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

#include "namf/image_io.hpp"
#include "namf/metrics.hpp"
#include "namf/noise.hpp"
#include "test_support.hpp"

namespace namf {
namespace {

TEST_CASE("density 0 leaves the image untouched") {
  const GrayImage img = testing::RandomGray(40, 30, 1);
  const NoisyImage n = InjectSap(img, {0.0, 0.5, 7});
  CHECK(n.noisy == img);
  CHECK(CountOnes(n.truth) == 0);
}

TEST_CASE("density 1 corrupts every pixel") {
  const GrayImage img = testing::RandomGray(40, 30, 2);
  const NoisyImage n = InjectSap(img, {1.0, 0.5, 7});
  CHECK(CountOnes(n.truth) == img.size());
  for (auto v : n.noisy.pixels()) CHECK((v == 0 || v == 255));
}

TEST_CASE("salt fraction selects the impulse value") {
  const GrayImage img(20, 20, 100);
  const NoisyImage salt = InjectSap(img, {1.0, 1.0, 3});
  const NoisyImage pepper = InjectSap(img, {1.0, 0.0, 3});
  for (auto v : salt.noisy.pixels()) CHECK(v == 255);
  for (auto v : pepper.noisy.pixels()) CHECK(v == 0);
}

TEST_CASE("marked pixels are extremes and unmarked pixels are unchanged") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const GrayImage img = testing::RandomGray(50, 50, seed);
    const NoisyImage n = InjectSap(img, {0.1 * (seed + 1), 0.5, seed});
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (n.truth[i]) {
        CHECK((n.noisy[i] == 0 || n.noisy[i] == 255));
      } else {
        CHECK(n.noisy[i] == img[i]);
      }
    }
  }
}

TEST_CASE("pixels already at an extreme are still marked when hit") {
  const GrayImage img(16, 16, 255);
  const NoisyImage n = InjectSap(img, {0.5, 1.0, 11});
  CHECK(n.noisy == img);
  CHECK(CountOnes(n.truth) > 0);
}

TEST_CASE("corrupted fraction concentrates around the density") {
  const GrayImage img(256, 256, 90);
  const double mn = static_cast<double>(img.size());
  for (double alpha : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (std::uint64_t seed = 100; seed < 105; ++seed) {
      const NoisyImage n = InjectSap(img, {alpha, 0.5, seed});
      const double frac = CountOnes(n.truth) / mn;
      CHECK(std::abs(frac - alpha) < 3.0 * std::sqrt(alpha * (1 - alpha) / mn));
      // Salt share among corrupted pixels.
      std::size_t salt = 0;
      for (auto v : n.noisy.pixels()) salt += v == 255;
      const double k = CountOnes(n.truth);
      CHECK(std::abs(salt / k - 0.5) < 3.0 * std::sqrt(0.25 / k));
    }
  }
}

TEST_CASE("injection is deterministic in the seed") {
  const GrayImage img = testing::RandomGray(64, 64, 5);
  const NoisyImage a = InjectSap(img, {0.4, 0.5, 1234});
  const NoisyImage b = InjectSap(img, {0.4, 0.5, 1234});
  const NoisyImage c = InjectSap(img, {0.4, 0.5, 1235});
  CHECK(a.noisy == b.noisy);
  CHECK(a.truth == b.truth);
  CHECK(a.truth != c.truth);
}

TEST_CASE("invalid specs are rejected") {
  const GrayImage img(4, 4, 1);
  CHECK_THROWS_WITH_AS(InjectSap(img, {1.5, 0.5, 0}), "density must be in [0,1]",
                       std::invalid_argument);
  CHECK_THROWS_AS(InjectSap(img, {-0.1, 0.5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(InjectSap(img, {0.5, 1.2, 0}), std::invalid_argument);
}

TEST_CASE("90% noise on Lena gives roughly 5.9 dB") {
  const GrayImage lena = LoadImage(testing::CorpusPath("lena"));
  const NoisyImage n = InjectSap(lena, {0.9, 0.5, 1});
  CHECK(Psnr(lena, n.noisy) == doctest::Approx(5.8973).epsilon(0.3 / 5.8973));
}

}  // namespace
}  // namespace namf
