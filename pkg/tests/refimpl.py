"""Slow per-pixel reference resamplers and independent oracles.

The reference resamplers evaluate the library's scalar per-pixel
operations in plain loops; they exist to pin the vectorized resamplers
bit-for-bit. The oracles at the bottom share no code with the library's
selection logic.
"""

from collections import Counter

import numpy as np

from nnvresize import (
    Image,
    bilinear_at,
    cubic_kernel,
    map_coord,
    map_locus,
    nnv_pixel,
    cell_at,
)


def _quantize_scalar(value: float, max_value: int) -> int:
    import math

    return int(min(max(math.floor(value + 0.5), 0), max_value))


def ref_resample_nn(img: Image, ratio: int) -> Image:
    out = np.empty((img.height * ratio, img.width * ratio), dtype=np.uint8)
    for y in range(out.shape[0]):
        y0, fy = map_coord(y, ratio)
        yi = y0 if fy <= 0.5 else min(y0 + 1, img.height - 1)
        for x in range(out.shape[1]):
            x0, fx = map_coord(x, ratio)
            xi = x0 if fx <= 0.5 else min(x0 + 1, img.width - 1)
            out[y, x] = img.get(xi, yi)
    return Image(out, img.max_value)


def ref_resample_bilinear(img: Image, ratio: int) -> Image:
    out = np.empty((img.height * ratio, img.width * ratio), dtype=np.uint8)
    for y in range(out.shape[0]):
        for x in range(out.shape[1]):
            locus = map_locus(img.width, img.height, x, y, ratio)
            out[y, x] = _quantize_scalar(bilinear_at(img, locus), img.max_value)
    return Image(out, img.max_value)


def ref_resample_bicubic(img: Image, ratio: int) -> Image:
    out = np.empty((img.height * ratio, img.width * ratio), dtype=np.uint8)
    for y in range(out.shape[0]):
        y0, ty = map_coord(y, ratio)
        rows = [min(max(y0 + j, 0), img.height - 1) for j in (-1, 0, 1, 2)]
        wy = [cubic_kernel(1.0 + ty), cubic_kernel(ty), cubic_kernel(1.0 - ty), cubic_kernel(2.0 - ty)]
        for x in range(out.shape[1]):
            x0, tx = map_coord(x, ratio)
            cols = [min(max(x0 + j, 0), img.width - 1) for j in (-1, 0, 1, 2)]
            wx = [cubic_kernel(1.0 + tx), cubic_kernel(tx), cubic_kernel(1.0 - tx), cubic_kernel(2.0 - tx)]
            # horizontal pass then vertical, same association order as the
            # vectorized path so results match bit-for-bit
            value = 0.0
            for j in range(4):
                row = img.pixels[rows[j]]
                mid = (
                    wx[0] * row[cols[0]]
                    + wx[1] * row[cols[1]]
                    + wx[2] * row[cols[2]]
                    + wx[3] * row[cols[3]]
                )
                value = value + wy[j] * mid
            out[y, x] = _quantize_scalar(value, img.max_value)
    return Image(out, img.max_value)


def ref_resample_nnv(img: Image, ratio: int) -> Image:
    out = np.empty((img.height * ratio, img.width * ratio), dtype=np.uint8)
    for y in range(out.shape[0]):
        y0, fy = map_coord(y, ratio)
        for x in range(out.shape[1]):
            x0, fx = map_coord(x, ratio)
            if fx == 0.0 and fy == 0.0:
                out[y, x] = img.get(x0, y0)
            else:
                out[y, x] = nnv_pixel(cell_at(img, x, y, ratio))
    return Image(out, img.max_value)


REF_RESAMPLERS = {
    "nn": ref_resample_nn,
    "bilinear": ref_resample_bilinear,
    "bicubic": ref_resample_bicubic,
    "nnv": ref_resample_nnv,
}


# --- independent oracles -------------------------------------------------


def oracle_unique_mode(values):
    """The single strictly-most-frequent value, or None."""
    counts = Counter(values)
    best = max(counts.values())
    winners = [v for v, c in counts.items() if c == best]
    if best >= 2 and len(winners) == 1:
        return winners[0]
    return None


def oracle_first_argmin(values) -> int:
    """0-based index of the first occurrence of the minimum."""
    values = list(values)
    return values.index(min(values))


def oracle_nnv_centered(a: int, k: int, p: int, g: int) -> int:
    """Fill value for a centered empty location (offsets 0.5, 0.5):
    unique mode if any, else the neighbor nearest the plain four-way mean."""
    mode = oracle_unique_mode((a, k, p, g))
    if mode is not None:
        return mode
    mean = (a + k + p + g) / 4.0
    gaps = [abs(a - mean), abs(k - mean), abs(p - mean), abs(g - mean)]
    return (a, k, p, g)[oracle_first_argmin(gaps)]
