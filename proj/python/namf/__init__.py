# Copyright 2026 The NAMF Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Salt-and-pepper noise removal (adaptive detection + non-local means)."""

from ._core import (
    DetectorParams,
    NlmParams,
    candidate_mask,
    detect,
    inject_sap,
    load_image,
    median_filter,
    mse,
    namf,
    nlm_restore_fast,
    nlm_restore_naive,
    psnr,
    restore_stage1,
    save_image,
    smoothing_h,
    ssim,
    ssim_global,
)

__all__ = [
    "DetectorParams",
    "NlmParams",
    "candidate_mask",
    "detect",
    "inject_sap",
    "load_image",
    "median_filter",
    "mse",
    "namf",
    "nlm_restore_fast",
    "nlm_restore_naive",
    "psnr",
    "restore_stage1",
    "save_image",
    "smoothing_h",
    "ssim",
    "ssim_global",
]
