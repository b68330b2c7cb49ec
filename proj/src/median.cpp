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

#include "namf/median.hpp"

#include <algorithm>
#include <array>

#include "namf/padding.hpp"

namespace namf {

GrayImage MedianFilter(const GrayImage& img) {
  const GrayImage ext = ExtendReflect(img, 1);
  GrayImage out(img.width(), img.height());
  std::array<std::uint8_t, 9> window;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      int n = 0;
      for (int dr = 0; dr < 3; ++dr) {
        for (int dc = 0; dc < 3; ++dc) window[n++] = ext(r + dr, c + dc);
      }
      std::nth_element(window.begin(), window.begin() + 4, window.end());
      out(r, c) = window[4];
    }
  }
  return out;
}

}  // namespace namf
