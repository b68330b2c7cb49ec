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

#ifndef NAMF_MEDIAN_HPP_
#define NAMF_MEDIAN_HPP_

#include "namf/image.hpp"

namespace namf {

// 3x3 median over every pixel, noisy or not. Borders use reflect-101.
GrayImage MedianFilter(const GrayImage& img);

}  // namespace namf

#endif  // NAMF_MEDIAN_HPP_
