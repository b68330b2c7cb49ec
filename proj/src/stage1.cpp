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

#include "namf/stage1.hpp"

#include <array>

#include "namf/padding.hpp"

namespace namf {

double AdaptiveMean(const GrayImage& noisy_input, const FloatImage& restored,
                    const PixelMask& mask, int row, int col, int radius) {
  if (!mask(row, col)) {
    throw ContractViolation("AdaptiveMean called on a pixel not marked noisy");
  }
  const int h = noisy_input.height(), w = noisy_input.width();
  int non_extreme = 0;
  int kept = 0;
  double sum = 0.0;
  for (int dr = -radius; dr <= radius; ++dr) {
    const int r = ReflectIndex(row + dr, h);
    for (int dc = -radius; dc <= radius; ++dc) {
      const int c = ReflectIndex(col + dc, w);
      const std::uint8_t v = noisy_input(r, c);
      non_extreme += !IsExtreme(v);
      if (!mask(r, c)) {
        sum += v;
        ++kept;
      }
    }
  }
  if (non_extreme > 0 && kept > 0) return sum / kept;

  const std::array<Position, 3> neighbors = {
      Position{row - 1, col - 1}, Position{row - 1, col},
      Position{row, col - 1}};
  double acc = 0.0;
  int used = 0;
  for (const Position& n : neighbors) {
    const int r = ReflectIndex(n.row, h);
    const int c = ReflectIndex(n.col, w);
    const bool processed = r < row || (r == row && c < col);
    if (processed || !mask(r, c)) {
      acc += restored(r, c);
      ++used;
    }
  }
  return used > 0 ? acc / used : kFallbackGray;
}

Stage1Output RestoreStage1(const GrayImage& noisy_input,
                           const DetectorParams& params) {
  // Detection reads only the input, so the whole mask is known before the
  // replacement pass starts.
  DetectionResult det = Detect(noisy_input, params);
  Stage1Output out{ToFloat(noisy_input), std::move(det.noisy),
                   std::move(det.radius)};
  for (int r = 0; r < noisy_input.height(); ++r) {
    for (int c = 0; c < noisy_input.width(); ++c) {
      if (!out.noisy(r, c)) continue;
      out.restored(r, c) = AdaptiveMean(noisy_input, out.restored, out.noisy,
                                        r, c, out.radius(r, c));
    }
  }
  return out;
}

}  // namespace namf
