#!/usr/bin/env python3
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
"""Rebuilds the 512x512 grayscale test corpus in tests/data/corpus.

The classic test images are not redistributed on their own anywhere reachable
from a plain package index, so they are pulled out of old Python package
archives that bundled them:

  lena     scipy 0.16.1 wheel, scipy/misc/lena.dat (pickled 512x512 array)
  barbara  sporco 0.2.2 wheel, sporco/data/barbara.png (702x574 RGB original,
           converted to ITU-R 601 luma and resampled to 512x512)
  boat     spams 2.6.5.4 sdist, data/boat.png
  camera   scikit-image (installed), skimage/data/camera.png

Output files are binary PGM (P5, maxval 255). SHA-256 sums are printed so they
can be compared against tests/data/corpus/SHA256SUMS.
"""

import argparse
import hashlib
import io
import pathlib
import pickle
import tarfile
import urllib.request
import zipfile

import numpy as np
from PIL import Image

SOURCES = {
    "scipy": "https://files.pythonhosted.org/packages/4b/d3/"
    "56cbe9ed12650072ce0f9669ed99657840db15d756ce4084c82b50b92f25/"
    "scipy-0.16.1-cp35-cp35m-manylinux1_x86_64.whl",
    "sporco": "https://files.pythonhosted.org/packages/40/55/"
    "0e34478be4cd365a85853f82e3d4f2b09da9d20b27c98649c1448e21d7c5/"
    "sporco-0.2.2.post1-py3-none-any.whl",
    "spams": "https://files.pythonhosted.org/packages/e4/26/"
    "7a47021754e8020ac82c1ba8d0b719198ec28cdc922152caea16b7512864/"
    "spams-2.6.5.4.tar.gz",
}


def fetch(name, cache):
    path = cache / SOURCES[name].rsplit("/", 1)[1]
    if not path.exists():
        with urllib.request.urlopen(SOURCES[name], timeout=600) as r:
            path.write_bytes(r.read())
    return path.read_bytes()


def write_pgm(path, pixels):
    pixels = np.ascontiguousarray(pixels, dtype=np.uint8)
    h, w = pixels.shape
    path.write_bytes(b"P5\n%d %d\n255\n" % (w, h) + pixels.tobytes())
    return hashlib.sha256(path.read_bytes()).hexdigest()


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=root / "tests/data/corpus")
    ap.add_argument("--cache", type=pathlib.Path, default=pathlib.Path("/tmp/namf-corpus-cache"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    args.cache.mkdir(parents=True, exist_ok=True)

    images = {}
    with zipfile.ZipFile(io.BytesIO(fetch("scipy", args.cache))) as z:
        lena = pickle.loads(z.read("scipy/misc/lena.dat"), encoding="latin1")
        images["lena"] = np.asarray(lena)
    with zipfile.ZipFile(io.BytesIO(fetch("sporco", args.cache))) as z:
        rgb = Image.open(io.BytesIO(z.read("sporco/data/barbara.png")))
        images["barbara"] = np.asarray(rgb.convert("L").resize((512, 512), Image.BICUBIC))
    with tarfile.open(fileobj=io.BytesIO(fetch("spams", args.cache))) as t:
        boat = Image.open(t.extractfile("spams-2.6.5.4/data/boat.png"))
        images["boat"] = np.asarray(boat.convert("L"))
    import skimage.data

    images["camera"] = skimage.data.camera()

    sums = []
    for name, px in sorted(images.items()):
        assert px.shape == (512, 512), (name, px.shape)
        digest = write_pgm(args.out / f"{name}.pgm", px)
        sums.append(f"{digest}  {name}.pgm")
    print("\n".join(sums))


if __name__ == "__main__":
    main()
