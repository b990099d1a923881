"""Mean squared error and peak signal-to-noise ratio between images."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import Image


@dataclass(frozen=True)
class MetricsReport:
    """MSE plus PSNR in dB; psnr_db is None exactly when MSE is zero."""

    mse: float
    psnr_db: float | None


def _check_dims(reference: Image, test: Image) -> None:
    if (reference.width, reference.height) != (test.width, test.height):
        raise ValueError(
            f"dimension mismatch: {reference.width}x{reference.height}"
            f" vs {test.width}x{test.height}"
        )


def mse(reference: Image, test: Image) -> float:
    """Mean squared intensity difference.

    Squared differences are summed in integer arithmetic before the one
    division, so the result does not depend on summation order.
    """
    _check_dims(reference, test)
    diff = reference.pixels.astype(np.int64) - test.pixels.astype(np.int64)
    total = int(np.sum(diff * diff, dtype=np.int64))
    return total / (reference.width * reference.height)


def psnr(reference: Image, test: Image) -> MetricsReport:
    """PSNR in dB relative to the images' shared max_value.

    Identical images have zero MSE and an undefined PSNR, reported as
    psnr_db=None.
    """
    _check_dims(reference, test)
    if reference.max_value != test.max_value:
        raise ValueError(
            f"max_value mismatch: {reference.max_value} vs {test.max_value}"
        )
    err = mse(reference, test)
    if err == 0.0:
        return MetricsReport(mse=0.0, psnr_db=None)
    peak = reference.max_value
    return MetricsReport(mse=err, psnr_db=10.0 * math.log10(peak * peak / err))
