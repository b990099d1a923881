"""Shared fixtures: RNG and resolution of the standard 512x512 originals.

The PSNR-ordering acceptance check runs against the classic grayscale
test set (cameraman, girl, house, peppers). Those photographs are not
redistributable with this package and cannot be fetched in an offline
environment: drop 512x512 PGM copies named <name>.pgm into a directory
and point NNV_ORIGINALS_DIR at it to enable the check. Note that
scikit-image's bundled "camera" image is NOT the classic cameraman (it
was replaced in scikit-image 0.18), so it is never used as one; it only
serves as a labeled stand-in where pixel content is irrelevant (timing).
"""

import os
from pathlib import Path

import numpy as np
import pytest

from nnvresize import Image, read_pgm

STANDARD_ORIGINAL_NAMES = ("cameraman", "girl", "house", "peppers")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_image(rng, width, height, max_value=255):
    return Image(rng.integers(0, max_value + 1, size=(height, width)), max_value)


def find_standard_original(name: str):
    """Image for one of the standard originals, or None if unavailable."""
    env_dir = os.environ.get("NNV_ORIGINALS_DIR")
    if env_dir:
        candidate = Path(env_dir) / f"{name}.pgm"
        if candidate.is_file():
            return read_pgm(candidate)
    return None


def available_standard_originals():
    """(name, Image) pairs for every resolvable standard original."""
    found = []
    for name in STANDARD_ORIGINAL_NAMES:
        img = find_standard_original(name)
        if img is not None:
            found.append((name, img))
    return found


def timing_image():
    """(label, 512x512 Image) for wall-clock measurements.

    Timing does not depend on pixel content (the resamplers are fixed
    -shape array pipelines with no data-dependent branching), so any
    512x512 raster exercises the same code paths as the standard set.
    """
    try:
        from skimage import data
    except ImportError:
        seeded = np.random.default_rng(512)
        return "synthetic 512x512 stand-in", Image(
            seeded.integers(0, 256, size=(512, 512))
        )
    return "scikit-image 'camera' stand-in", Image(data.camera())
