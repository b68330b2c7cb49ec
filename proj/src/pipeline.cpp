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

#include "namf/pipeline.hpp"

#include <stdexcept>

namespace namf {

NamfOutput RunNamf(const GrayImage& noisy, const DetectorParams& detector,
                   const NlmParams& nlm, int threads) {
  nlm.Validate();
  NamfOutput out;
  out.stage1 = RestoreStage1(noisy, detector);
  out.h = SmoothingH(out.stage1.noisy, nlm);
  out.refined =
      NlmRestoreFast(out.stage1.restored, out.stage1.noisy, nlm, threads);
  out.image = Quantize(out.refined);
  return out;
}

GrayImage Namf(const GrayImage& noisy, const DetectorParams& detector,
               const NlmParams& nlm, int threads) {
  return RunNamf(noisy, detector, nlm, threads).image;
}

Method ParseMethod(std::string_view name) {
  if (name == "namf") return Method::kNamf;
  if (name == "mf") return Method::kMedian;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected namf or mf)");
}

std::string MethodName(Method m) {
  return m == Method::kNamf ? "namf" : "mf";
}

}  // namespace namf
