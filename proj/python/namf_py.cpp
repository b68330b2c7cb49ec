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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <string>
#include <tuple>

#include "namf/detector.hpp"
#include "namf/image_io.hpp"
#include "namf/median.hpp"
#include "namf/metrics.hpp"
#include "namf/nlm.hpp"
#include "namf/noise.hpp"
#include "namf/pipeline.hpp"
#include "namf/stage1.hpp"

namespace py = pybind11;

namespace {

template <typename T>
using Array = py::array_t<T, py::array::c_style | py::array::forcecast>;

template <typename Image>
Image FromArray(const Array<typename Image::value_type>& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  Image img(w, h);
  std::memcpy(img.pixels().data(), a.data(),
              img.size() * sizeof(typename Image::value_type));
  return img;
}

template <typename Image>
Array<typename Image::value_type> ToArray(const Image& img) {
  Array<typename Image::value_type> a({img.height(), img.width()});
  std::memcpy(a.mutable_data(), img.pixels().data(),
              img.size() * sizeof(typename Image::value_type));
  return a;
}

namf::PixelMask MaskFromArray(const Array<std::uint8_t>& a) {
  namf::PixelMask m = FromArray<namf::PixelMask>(a);
  for (auto& b : m.pixels()) b = b != 0;
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Salt-and-pepper noise removal core";

  py::register_exception<namf::ImageError>(m, "ImageError", PyExc_ValueError);

  py::class_<namf::DetectorParams>(m, "DetectorParams")
      .def(py::init<>())
      .def_readwrite("w_max", &namf::DetectorParams::w_max)
      .def_readwrite("w_step", &namf::DetectorParams::w_step)
      .def_readwrite("threshold", &namf::DetectorParams::threshold);

  py::class_<namf::NlmParams>(m, "NlmParams")
      .def(py::init<>())
      .def_readwrite("patch_radius", &namf::NlmParams::patch_radius)
      .def_readwrite("search_radius", &namf::NlmParams::search_radius)
      .def_readwrite("beta0", &namf::NlmParams::beta0)
      .def_readwrite("beta1", &namf::NlmParams::beta1)
      .def_readwrite("beta2", &namf::NlmParams::beta2)
      .def_readwrite("kernel_sigma", &namf::NlmParams::kernel_sigma);

  m.def("load_image", [](const std::string& path) {
    return ToArray(namf::LoadImage(path));
  });
  m.def("save_image", [](const Array<std::uint8_t>& img, const std::string& path) {
    namf::SaveImage(FromArray<namf::GrayImage>(img), path);
  });

  m.def(
      "inject_sap",
      [](const Array<std::uint8_t>& img, double density, std::uint64_t seed,
         double salt_fraction) {
        auto r = namf::InjectSap(FromArray<namf::GrayImage>(img),
                                 {density, salt_fraction, seed});
        return std::make_tuple(ToArray(r.noisy), ToArray(r.truth));
      },
      py::arg("image"), py::arg("density"), py::arg("seed") = 0,
      py::arg("salt_fraction") = 0.5,
      "Returns (noisy, truth_mask).");

  m.def("candidate_mask", [](const Array<std::uint8_t>& img) {
    return ToArray(namf::CandidateMask(FromArray<namf::GrayImage>(img)));
  });

  m.def(
      "detect",
      [](const Array<std::uint8_t>& img, const namf::DetectorParams& p) {
        auto r = namf::Detect(FromArray<namf::GrayImage>(img), p);
        return std::make_tuple(ToArray(r.noisy), ToArray(r.radius));
      },
      py::arg("image"), py::arg("params") = namf::DetectorParams{},
      "Returns (noisy_mask, window_radius).");

  m.def(
      "restore_stage1",
      [](const Array<std::uint8_t>& img, const namf::DetectorParams& p) {
        auto r = namf::RestoreStage1(FromArray<namf::GrayImage>(img), p);
        return std::make_tuple(ToArray(r.restored), ToArray(r.noisy),
                               ToArray(r.radius));
      },
      py::arg("image"), py::arg("params") = namf::DetectorParams{},
      "Returns (restored_float, noisy_mask, window_radius).");

  m.def(
      "smoothing_h",
      [](const Array<std::uint8_t>& mask, const namf::NlmParams& p) {
        return namf::SmoothingH(MaskFromArray(mask), p);
      },
      py::arg("mask"), py::arg("params") = namf::NlmParams{});

  m.def(
      "nlm_restore_naive",
      [](const Array<double>& z, const Array<std::uint8_t>& mask,
         const namf::NlmParams& p) {
        return ToArray(namf::NlmRestoreNaive(FromArray<namf::FloatImage>(z),
                                             MaskFromArray(mask), p));
      },
      py::arg("image"), py::arg("mask"), py::arg("params") = namf::NlmParams{});

  m.def(
      "nlm_restore_fast",
      [](const Array<double>& z, const Array<std::uint8_t>& mask,
         const namf::NlmParams& p, int threads) {
        namf::FloatImage zi = FromArray<namf::FloatImage>(z);
        namf::PixelMask mi = MaskFromArray(mask);
        namf::FloatImage out;
        {
          py::gil_scoped_release release;
          out = namf::NlmRestoreFast(zi, mi, p, threads);
        }
        return ToArray(out);
      },
      py::arg("image"), py::arg("mask"), py::arg("params") = namf::NlmParams{},
      py::arg("threads") = 1);

  m.def(
      "namf",
      [](const Array<std::uint8_t>& img, const namf::DetectorParams& dp,
         const namf::NlmParams& np, int threads) {
        namf::GrayImage in = FromArray<namf::GrayImage>(img);
        namf::GrayImage out;
        {
          py::gil_scoped_release release;
          out = namf::Namf(in, dp, np, threads);
        }
        return ToArray(out);
      },
      py::arg("image"), py::arg("detector") = namf::DetectorParams{},
      py::arg("nlm") = namf::NlmParams{}, py::arg("threads") = 1,
      "Two-stage salt-and-pepper restoration; returns a uint8 array.");

  m.def("median_filter", [](const Array<std::uint8_t>& img) {
    return ToArray(namf::MedianFilter(FromArray<namf::GrayImage>(img)));
  });

  m.def("mse", [](const Array<std::uint8_t>& u, const Array<std::uint8_t>& v) {
    return namf::Mse(FromArray<namf::GrayImage>(u), FromArray<namf::GrayImage>(v));
  });
  m.def("psnr", [](const Array<std::uint8_t>& u, const Array<std::uint8_t>& v) {
    return namf::Psnr(FromArray<namf::GrayImage>(u), FromArray<namf::GrayImage>(v));
  });
  m.def("ssim", [](const Array<std::uint8_t>& u, const Array<std::uint8_t>& v) {
    return namf::Ssim(FromArray<namf::GrayImage>(u), FromArray<namf::GrayImage>(v));
  });
  m.def("ssim_global", [](const Array<std::uint8_t>& u, const Array<std::uint8_t>& v) {
    return namf::SsimGlobal(FromArray<namf::GrayImage>(u),
                            FromArray<namf::GrayImage>(v));
  });
}
