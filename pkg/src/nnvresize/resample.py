"""Classic integer-ratio upscalers: nearest neighbor, bilinear, separable bicubic.

All three share one geometry: output position ``dst`` maps to source
position ``dst / ratio`` (top-left anchored, so source pixels land exactly
on every ratio-th output pixel), and out-of-range taps clamp to the edge.
Quantization is round half up, then clamp to [0, max_value].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import Image

# cubic-convolution sharpness parameter (Catmull-Rom)
CUBIC_A = -0.5


def _check_ratio(ratio) -> None:
    if not isinstance(ratio, int) or ratio < 1:
        raise ValueError(f"ratio must be an integer >= 1, got {ratio!r}")


def map_coord(dst_index: int, ratio: int) -> tuple[int, float]:
    """Map an output index to (source base index, fractional offset).

    The source position is ``dst_index / ratio``; the fraction is its part
    past the base index, in [0, 1). Exact source sample sites come back
    with fraction 0.0.
    """
    _check_ratio(ratio)
    s = dst_index / ratio
    base = math.floor(s)
    return base, s - base


def map_axis(dst_len: int, ratio: int) -> tuple[np.ndarray, np.ndarray]:
    """Vector form of map_coord over a whole axis: (bases, fractions)."""
    _check_ratio(ratio)
    s = np.arange(dst_len, dtype=np.float64) / ratio
    base = np.floor(s)
    return base.astype(np.int64), s - base


@dataclass(frozen=True)
class SourceLocus:
    """2x2 source cell around a mapped output position.

    (x0, y0) is the base sample, (x1, y1) the companion clamped to the
    image; (dx, dy) are the fractional offsets inside the cell.
    """

    x0: int
    y0: int
    x1: int
    y1: int
    dx: float
    dy: float


def map_locus(width: int, height: int, dst_x: int, dst_y: int, ratio: int) -> SourceLocus:
    """Locate the source cell for output pixel (dst_x, dst_y)."""
    x0, dx = map_coord(dst_x, ratio)
    y0, dy = map_coord(dst_y, ratio)
    return SourceLocus(
        x0=x0,
        y0=y0,
        x1=min(x0 + 1, width - 1),
        y1=min(y0 + 1, height - 1),
        dx=dx,
        dy=dy,
    )


def bilinear_blend(p00, p10, p01, p11, dx, dy):
    """Tensor-product average of a 2x2 cell: rows first, then columns.

    Accepts scalars or broadcastable arrays; fixed evaluation order keeps
    scalar and vectorized callers bit-identical.
    """
    top = (1.0 - dx) * p00 + dx * p10
    bottom = (1.0 - dx) * p01 + dx * p11
    return (1.0 - dy) * top + dy * bottom


def bilinear_at(img: Image, locus: SourceLocus) -> float:
    """Unquantized bilinear value at a source locus."""
    return float(
        bilinear_blend(
            img.get(locus.x0, locus.y0),
            img.get(locus.x1, locus.y0),
            img.get(locus.x0, locus.y1),
            img.get(locus.x1, locus.y1),
            locus.dx,
            locus.dy,
        )
    )


def quantize(values, max_value: int) -> np.ndarray:
    """Round half up and clamp to [0, max_value]; returns uint8."""
    q = np.floor(np.asarray(values, dtype=np.float64) + 0.5)
    return np.clip(q, 0, max_value).astype(np.uint8)


def resample_nn(img: Image, ratio: int) -> Image:
    """Upscale by copying the nearest source pixel (ties go to the lower index)."""
    _check_ratio(ratio)
    x0, fx = map_axis(img.width * ratio, ratio)
    y0, fy = map_axis(img.height * ratio, ratio)
    xi = np.where(fx <= 0.5, x0, np.minimum(x0 + 1, img.width - 1))
    yi = np.where(fy <= 0.5, y0, np.minimum(y0 + 1, img.height - 1))
    return Image(img.pixels[yi[:, None], xi[None, :]], img.max_value)


def resample_bilinear(img: Image, ratio: int) -> Image:
    """Upscale with bilinear interpolation over clamped 2x2 cells."""
    _check_ratio(ratio)
    pix = img.pixels
    x0, fx = map_axis(img.width * ratio, ratio)
    y0, fy = map_axis(img.height * ratio, ratio)
    x1 = np.minimum(x0 + 1, img.width - 1)
    y1 = np.minimum(y0 + 1, img.height - 1)
    values = bilinear_blend(
        pix[y0[:, None], x0[None, :]],
        pix[y0[:, None], x1[None, :]],
        pix[y1[:, None], x0[None, :]],
        pix[y1[:, None], x1[None, :]],
        fx[None, :],
        fy[:, None],
    )
    return Image(quantize(values, img.max_value), img.max_value)


def cubic_kernel(t: float) -> float:
    """Cubic-convolution weight at distance t (a = -0.5).

    Interpolating: 1 at t=0, 0 at integer |t| >= 1, support (-2, 2).
    """
    u = abs(t)
    if u <= 1.0:
        return ((CUBIC_A + 2.0) * u - (CUBIC_A + 3.0)) * u * u + 1.0
    if u < 2.0:
        return (((u - 5.0) * u + 8.0) * u - 4.0) * CUBIC_A
    return 0.0


def _cubic_kernel_arr(t: np.ndarray) -> np.ndarray:
    # mirrors cubic_kernel with identical polynomial evaluation order
    u = np.abs(t)
    inner = ((CUBIC_A + 2.0) * u - (CUBIC_A + 3.0)) * u * u + 1.0
    outer = (((u - 5.0) * u + 8.0) * u - 4.0) * CUBIC_A
    return np.where(u <= 1.0, inner, np.where(u < 2.0, outer, 0.0))


def _cubic_axis(dst_len: int, src_len: int, ratio: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-output-position tap indices (4, dst_len) and weights (4, dst_len)."""
    base, frac = map_axis(dst_len, ratio)
    offsets = np.array([-1, 0, 1, 2], dtype=np.int64)
    taps = np.clip(base[None, :] + offsets[:, None], 0, src_len - 1)
    weights = np.stack(
        [
            _cubic_kernel_arr(1.0 + frac),
            _cubic_kernel_arr(frac),
            _cubic_kernel_arr(1.0 - frac),
            _cubic_kernel_arr(2.0 - frac),
        ]
    )
    return taps, weights


def resample_bicubic(img: Image, ratio: int) -> Image:
    """Upscale with separable 4x4 cubic convolution, edge taps clamped."""
    _check_ratio(ratio)
    pix = img.pixels.astype(np.float64)
    cols, wx = _cubic_axis(img.width * ratio, img.width, ratio)
    mid = (
        wx[0] * pix[:, cols[0]]
        + wx[1] * pix[:, cols[1]]
        + wx[2] * pix[:, cols[2]]
        + wx[3] * pix[:, cols[3]]
    )
    rows, wy = _cubic_axis(img.height * ratio, img.height, ratio)
    values = (
        wy[0][:, None] * mid[rows[0], :]
        + wy[1][:, None] * mid[rows[1], :]
        + wy[2][:, None] * mid[rows[2], :]
        + wy[3][:, None] * mid[rows[3], :]
    )
    return Image(quantize(values, img.max_value), img.max_value)
