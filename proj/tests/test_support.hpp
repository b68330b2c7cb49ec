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

// Shared helpers for the unit tests: seeded image generators, temporary
// directories and an index-map mirror used as an independent padding oracle.

#ifndef NAMF_TESTS_TEST_SUPPORT_HPP_
#define NAMF_TESTS_TEST_SUPPORT_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "namf/image.hpp"

namespace namf::testing {

inline GrayImage RandomGray(int w, int h, std::uint64_t seed, int lo = 0,
                            int hi = 255) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  GrayImage img(w, h);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(dist(rng));
  return img;
}

inline GrayImage RandomFromValues(int w, int h, std::uint64_t seed,
                                  const std::vector<std::uint8_t>& values) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  GrayImage img(w, h);
  for (auto& p : img.pixels()) p = values[pick(rng)];
  return img;
}

inline FloatImage RandomFloat(int w, int h, std::uint64_t seed,
                              double lo = 0.0, double hi = 255.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  FloatImage img(w, h);
  for (auto& p : img.pixels()) p = dist(rng);
  return img;
}

inline PixelMask RandomMask(int w, int h, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  PixelMask m(w, h, 0);
  for (auto& b : m.pixels()) b = flip(rng);
  return m;
}

// Single-bounce mirror without edge repetition, written out case by case.
inline int Mirror(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("namf-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string CorpusPath(const std::string& name) {
  return std::string(NAMF_CORPUS_DIR) + "/" + name + ".pgm";
}

}  // namespace namf::testing

#endif  // NAMF_TESTS_TEST_SUPPORT_HPP_
