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

#include "namf/noise.hpp"

#include <stdexcept>

namespace namf {

void NoiseSpec::Validate() const {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must be in [0,1]");
  }
  if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0)) {
    throw std::invalid_argument("salt fraction must be in [0,1]");
  }
}

NoisyImage InjectSap(const GrayImage& img, const NoiseSpec& spec) {
  spec.Validate();
  NoisyImage out{img, PixelMask(img.width(), img.height(), 0)};
  for (std::size_t k = 0; k < img.size(); ++k) {
    const double hit = UnitInterval(Mix64(spec.seed ^ Mix64(2 * k)));
    if (hit >= spec.density) continue;
    const double kind = UnitInterval(Mix64(spec.seed ^ Mix64(2 * k + 1)));
    out.noisy[k] = kind < spec.salt_fraction ? 255 : 0;
    out.truth[k] = 1;
  }
  return out;
}

}  // namespace namf
