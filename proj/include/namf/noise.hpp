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

#ifndef NAMF_NOISE_HPP_
#define NAMF_NOISE_HPP_

#include <cstdint>

#include "namf/image.hpp"

namespace namf {

struct NoiseSpec {
  double density = 0.0;         // probability that a pixel is corrupted
  double salt_fraction = 0.5;   // share of corrupted pixels set to 255
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when a field is outside [0, 1].
  void Validate() const;
};

struct NoisyImage {
  GrayImage noisy;
  PixelMask truth;  // 1 where the pixel was overwritten
};

// SplitMix64 finalizer. Used as a counter-based generator: the stream for
// pixel k is Mix(seed ^ Mix(2k)), Mix(seed ^ Mix(2k + 1)), so draws depend
// only on (seed, index) and can be produced in any order.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double UnitInterval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Corrupts each pixel independently: with probability `density` it becomes
/// 255 (share `salt_fraction`) or 0, otherwise it is kept. The truth mask
/// marks every overwritten pixel, including ones that already held the value
/// they were overwritten with.
NoisyImage InjectSap(const GrayImage& img, const NoiseSpec& spec);

}  // namespace namf

#endif  // NAMF_NOISE_HPP_
