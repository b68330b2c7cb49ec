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

#include "namf/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace namf {
namespace {

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G',
                                                        '\r', '\n', 0x1a, '\n'};

std::string Where(const std::filesystem::path& path) {
  return path.string() + ": ";
}

std::vector<unsigned char> ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError(Where(path) + "cannot open file for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw ImageError(Where(path) + "read failed");
  return bytes;
}

// Minimal cursor over the PGM header: whitespace and '#' comments between
// tokens, decimal integers.
class PgmHeader {
 public:
  PgmHeader(const std::vector<unsigned char>& bytes,
            const std::filesystem::path& path)
      : bytes_(bytes), path_(path) {}

  long NextInt(const char* what) {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw ImageError(Where(path_) + "malformed PGM header: expected " + what);
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000'000L) {
        throw ImageError(Where(path_) + "PGM " + what + " out of range");
      }
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t RasterStart() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ImageError(Where(path_) + "malformed PGM header: missing separator");
    }
    return pos_ + 1;
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<unsigned char>& bytes_;
  const std::filesystem::path& path_;
  std::size_t pos_ = 2;
};

GrayImage DecodePgm(const std::vector<unsigned char>& bytes,
                    const std::filesystem::path& path) {
  PgmHeader header(bytes, path);
  const long width = header.NextInt("width");
  const long height = header.NextInt("height");
  const long maxval = header.NextInt("maxval");
  if (maxval != 255) {
    throw ImageError(Where(path) + "unsupported PGM maxval " +
                     std::to_string(maxval) + " (only 255 is accepted)");
  }
  if (width <= 0 || height <= 0) {
    throw ImageError(Where(path) + "PGM dimensions must be positive");
  }
  const std::size_t start = header.RasterStart();
  const std::size_t count = static_cast<std::size_t>(width) * height;
  if (bytes.size() - start < count) {
    throw ImageError(Where(path) + "truncated PGM raster: expected " +
                     std::to_string(count) + " bytes, found " +
                     std::to_string(bytes.size() - start));
  }
  std::vector<std::uint8_t> pixels(bytes.begin() + start,
                                   bytes.begin() + start + count);
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::uint32_t BigEndian32(const unsigned char* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

GrayImage DecodePng(const std::vector<unsigned char>& bytes,
                    const std::filesystem::path& path) {
  // IHDR is always the first chunk: signature(8) length(4) type(4) then
  // width(4) height(4) bit_depth(1) color_type(1).
  if (bytes.size() < 33 || std::memcmp(bytes.data() + 12, "IHDR", 4) != 0) {
    throw ImageError(Where(path) + "malformed PNG: missing IHDR");
  }
  const int bit_depth = bytes[24];
  const int color_type = bytes[25];
  if (color_type != PNG_COLOR_TYPE_GRAY) {
    throw ImageError(Where(path) + "unsupported color type " +
                     std::to_string(color_type) +
                     " (only 8-bit grayscale without alpha is accepted)");
  }
  if (bit_depth != 8) {
    throw ImageError(Where(path) + "unsupported bit depth " +
                     std::to_string(bit_depth));
  }
  const std::uint32_t width = BigEndian32(bytes.data() + 16);
  const std::uint32_t height = BigEndian32(bytes.data() + 20);

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw ImageError(Where(path) + "PNG decode failed: " + image.message);
  }
  image.format = PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
  if (image.width != width || image.height != height ||
      !png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw ImageError(Where(path) + "PNG decode failed: " + msg);
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

bool HasPngExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

}  // namespace

GrayImage LoadImage(const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = ReadAll(path);
  if (bytes.size() >= 8 &&
      std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
    return DecodePng(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '5') return DecodePgm(bytes, path);
    throw ImageError(Where(path) + "unsupported format P" +
                     std::string(1, static_cast<char>(bytes[1])) +
                     " (only binary P5 PGM is accepted)");
  }
  throw ImageError(Where(path) + "unsupported format (expected PGM or PNG)");
}

void SaveImage(const GrayImage& img, const std::filesystem::path& path) {
  if (HasPngExtension(path)) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.c_str(), 0,
                                 img.pixels().data(), 0, nullptr)) {
      throw ImageError(Where(path) + "PNG write failed: " + image.message);
    }
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ImageError(Where(path) + "cannot open file for writing");
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.size()));
  out.flush();
  if (!out) throw ImageError(Where(path) + "write failed");
}

}  // namespace namf
