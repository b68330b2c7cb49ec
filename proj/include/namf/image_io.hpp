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

#ifndef NAMF_IMAGE_IO_HPP_
#define NAMF_IMAGE_IO_HPP_

#include <filesystem>

#include "namf/image.hpp"

namespace namf {

/// Reads a binary PGM (P5, maxval 255) or an 8-bit grayscale PNG. The format
/// is taken from the file signature, not the extension. Throws ImageError
/// naming the offending property (format, maxval, bit depth, color type).
GrayImage LoadImage(const std::filesystem::path& path);

/// Writes PNG when the extension is ".png" (any case), P5 PGM otherwise.
void SaveImage(const GrayImage& img, const std::filesystem::path& path);

}  // namespace namf

#endif  // NAMF_IMAGE_IO_HPP_
