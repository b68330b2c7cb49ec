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

#include <algorithm>
#include <cmath>

#include "namf/noise.hpp"
#include "namf/stage1.hpp"
#include "test_support.hpp"

namespace namf {
namespace {

// Mean of the input over window cells whose mask bit is clear.
double OracleMaskedMean(const GrayImage& y, const PixelMask& l, int row,
                        int col, int radius) {
  double num = 0.0, den = 0.0;
  for (int r = row - radius; r <= row + radius; ++r) {
    for (int c = col - radius; c <= col + radius; ++c) {
      const int rr = testing::Mirror(r, y.height());
      const int cc = testing::Mirror(c, y.width());
      num += (1 - l(rr, cc)) * static_cast<double>(y(rr, cc));
      den += 1 - l(rr, cc);
    }
  }
  return num / den;
}

TEST_CASE("two noiseless pixels average") {
  GrayImage y(3, 3, std::vector<std::uint8_t>{0, 255, 100, 255, 0, 0, 102, 255, 0});
  const PixelMask l = CandidateMask(y);
  CHECK(AdaptiveMean(y, ToFloat(y), l, 1, 1, 1) == 101.0);
}

TEST_CASE("fully extreme window falls back to restored raster neighbors") {
  GrayImage y(4, 4, 255);
  PixelMask l(4, 4, 1);
  FloatImage z = ToFloat(y);
  z(1, 1) = 120;
  z(1, 2) = 90;
  z(2, 1) = 90;
  CHECK(AdaptiveMean(y, z, l, 2, 2, 1) == 100.0);
}

TEST_CASE("masked mean matches the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GrayImage y =
        testing::RandomFromValues(7, 7, seed, {0, 255, 17, 64, 99, 180, 201});
    PixelMask l = CandidateMask(y);
    // Keep some extremes as texture so the weights are not just "non-extreme".
    std::mt19937_64 rng(seed);
    for (auto& b : l.pixels()) {
      if (b && rng() % 4 == 0) b = 0;
    }
    l(3, 3) = 1;
    const int radius = 1 + static_cast<int>(seed % 3);
    int non_extreme = 0;
    for (int r = 3 - radius; r <= 3 + radius; ++r) {
      for (int c = 3 - radius; c <= 3 + radius; ++c) {
        non_extreme += y(r, c) != 0 && y(r, c) != 255;
      }
    }
    if (non_extreme == 0) continue;
    CHECK(std::abs(AdaptiveMean(y, ToFloat(y), l, 3, 3, radius) -
                   OracleMaskedMean(y, l, 3, 3, radius)) < 1e-12);
  }
}

TEST_CASE("adaptive mean on a noiseless pixel is a contract violation") {
  const GrayImage y(3, 3, 50);
  CHECK_THROWS_AS(AdaptiveMean(y, ToFloat(y), PixelMask(3, 3, 0), 1, 1, 1),
                  ContractViolation);
}

TEST_CASE("clean mid-range image passes through") {
  const GrayImage y = testing::RandomGray(33, 21, 3, 1, 254);
  const Stage1Output s = RestoreStage1(y, {});
  CHECK(s.restored == ToFloat(y));
  CHECK(CountOnes(s.noisy) == 0);
}

TEST_CASE("isolated impulse in a flat image is restored exactly") {
  GrayImage y(11, 11, 100);
  y(5, 5) = 255;
  const Stage1Output s = RestoreStage1(y, {});
  CHECK(s.restored(5, 5) == 100.0);
  CHECK(CountOnes(s.noisy) == 1);
}

TEST_CASE("heavy noise: every flagged pixel is rewritten inside the clean range") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GrayImage x = testing::RandomGray(64, 48, seed, 30, 220);
    const NoisyImage n = InjectSap(x, {0.9, 0.5, seed});
    const Stage1Output s = RestoreStage1(n.noisy, {});
    CHECK(s.noisy == n.truth);
    for (std::size_t i = 0; i < s.restored.size(); ++i) {
      const double v = s.restored[i];
      CHECK(std::isfinite(v));
      if (s.noisy[i]) {
        CHECK(v != 0.0);
        CHECK(v != 255.0);
        // Convex combination of clean values (or of earlier restorations).
        CHECK(v >= 30.0);
        CHECK(v <= 220.0);
      } else {
        CHECK(v == n.noisy[i]);
      }
    }
  }
}

TEST_CASE("all-noise image resolves through the mid-gray fallback") {
  const GrayImage x(9, 7, 100);
  const NoisyImage n = InjectSap(x, {1.0, 0.5, 4});
  const Stage1Output s = RestoreStage1(n.noisy, {});
  REQUIRE(CountOnes(s.noisy) == x.size());
  for (double v : s.restored.pixels()) CHECK(v == kFallbackGray);
}

TEST_CASE("top-row fallback ignores unprocessed impulses below") {
  // Row 0 is all extremes; row 1 has one clean pixel so the corner window
  // must grow. With w_max = 1 the corner falls back and its reflected
  // neighbors are (1,1), (1,0) and (0,1).
  GrayImage y(5, 5, 255);
  for (int c = 0; c < 5; ++c) y(0, c) = c % 2 ? 0 : 255;
  y(1, 1) = 200;
  y(3, 3) = 50;
  DetectorParams p;
  p.w_max = 1;
  p.w_step = 1;
  const PixelMask l = [&] {
    PixelMask m = CandidateMask(y);
    return m;
  }();
  FloatImage z = ToFloat(y);
  // (0,0): window holds (1,1)=200, so the masked-mean branch applies.
  CHECK(AdaptiveMean(y, z, l, 0, 0, 1) == 200.0);
  // (0,4): the window is all extreme. Reflected neighbors (1,3) and (1,4)
  // are unprocessed impulses and are dropped; (0,3) precedes in raster order.
  z(0, 3) = 77;
  CHECK(AdaptiveMean(y, z, l, 0, 4, 1) == 77.0);
  // With no processed or clean neighbor at all, the mid-gray constant is used.
  GrayImage corner(3, 3, 255);
  CHECK(AdaptiveMean(corner, ToFloat(corner), PixelMask(3, 3, 1), 0, 0, 1) ==
        kFallbackGray);
  // Interior: all three neighbors precede and are averaged as-is.
  z(0, 3) = 10;
  z(0, 4) = 20;
  z(1, 3) = 30;
  CHECK(AdaptiveMean(y, z, l, 1, 4, 1) == 20.0);
}

}  // namespace
}  // namespace namf
