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

#ifndef NAMF_PADDING_HPP_
#define NAMF_PADDING_HPP_

#include <algorithm>
#include <string>

#include "namf/image.hpp"

namespace namf {

// Maps any integer index onto [0, n) by mirror reflection that does not
// repeat the edge sample (reflect-101): -1 -> 1, n -> n - 2. Indices further
// out keep bouncing, so the map is defined for every offset.
inline int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

// Padded copy of `img` grown by `radius` on every side using reflect-101,
// without the radius limit of PadReflect. Used internally by window filters
// whose reach can exceed small images.
template <typename T, typename Tag>
Raster<T, Tag> ExtendReflect(const Raster<T, Tag>& img, int radius) {
  if (radius < 0) throw ContractViolation("padding radius must be >= 0");
  const int w = img.width() + 2 * radius;
  const int h = img.height() + 2 * radius;
  Raster<T, Tag> out(w, h);
  for (int r = 0; r < h; ++r) {
    const int sr = ReflectIndex(r - radius, img.height());
    for (int c = 0; c < w; ++c) {
      out(r, c) = img(sr, ReflectIndex(c - radius, img.width()));
    }
  }
  return out;
}

// Reflect-101 padding. The border mirror must fit inside the image, i.e.
// radius < min(width, height).
template <typename T, typename Tag>
Raster<T, Tag> PadReflect(const Raster<T, Tag>& img, int radius) {
  if (radius < 0) throw ContractViolation("padding radius must be >= 0");
  if (radius >= std::min(img.width(), img.height())) {
    throw ContractViolation("radius too large for reflection: " +
                            std::to_string(radius) + " >= min(" +
                            std::to_string(img.width()) + ", " +
                            std::to_string(img.height()) + ")");
  }
  return ExtendReflect(img, radius);
}

}  // namespace namf

#endif  // NAMF_PADDING_HPP_
