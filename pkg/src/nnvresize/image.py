"""Grayscale image container, PGM codec, and block-average downsampling."""

from __future__ import annotations

import os

import numpy as np

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmError(ValueError):
    """Raised for malformed or unsupported PGM data."""


class Image:
    """Immutable grayscale raster with an explicit intensity ceiling.

    Pixels are stored row-major as uint8; coordinates are (x = column,
    y = row) with the origin at the top-left corner.
    """

    __slots__ = ("_pixels", "_max_value")

    def __init__(self, pixels, max_value: int = 255):
        arr = np.asarray(pixels)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D pixel grid, got ndim={arr.ndim}")
        if arr.size == 0:
            raise ValueError("image must have at least one pixel")
        if not np.issubdtype(arr.dtype, np.integer):
            raise TypeError(f"pixel values must be integers, got dtype {arr.dtype}")
        if not isinstance(max_value, int) or not 1 <= max_value <= 255:
            raise ValueError(f"max_value must be an integer in [1, 255], got {max_value!r}")
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 0 or hi > max_value:
            raise ValueError(f"pixel values [{lo}, {hi}] fall outside [0, {max_value}]")
        packed = np.ascontiguousarray(arr, dtype=np.uint8)
        packed.setflags(write=False)
        self._pixels = packed
        self._max_value = max_value

    @classmethod
    def from_flat(cls, width: int, height: int, values, max_value: int = 255) -> "Image":
        """Build an image from a flat row-major sequence of intensities."""
        arr = np.asarray(values)
        if arr.size != width * height:
            raise ValueError(f"expected {width * height} values for {width}x{height}, got {arr.size}")
        return cls(arr.reshape(height, width), max_value)

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    @property
    def max_value(self) -> int:
        return self._max_value

    @property
    def pixels(self) -> np.ndarray:
        """Read-only (height, width) uint8 array."""
        return self._pixels

    def get(self, x: int, y: int) -> int:
        """Intensity at column x, row y."""
        return int(self._pixels[y, x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self._max_value == other._max_value
            and self._pixels.shape == other._pixels.shape
            and bool(np.array_equal(self._pixels, other._pixels))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Image({self.width}x{self.height}, max_value={self._max_value})"


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    """Advance past whitespace and '#'-to-end-of-line comments."""
    n = len(data)
    while pos < n:
        byte = data[pos : pos + 1]
        if byte in _WHITESPACE:
            pos += 1
        elif byte == b"#":
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    return pos


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    pos = _skip_space_and_comments(data, pos)
    start = pos
    n = len(data)
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise PgmError("truncated header: expected another token")
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos)
    try:
        return int(token), pos
    except ValueError:
        raise PgmError(f"malformed header: {what} is not a number: {token!r}") from None


def load_pgm(data: bytes) -> Image:
    """Decode a binary (P5) or ASCII (P2) PGM byte sequence.

    Header comments are tolerated. Color formats (P6/P3) and maxval > 255
    are rejected.
    """
    try:
        magic, pos = _next_token(bytes(data), 0)
    except PgmError:
        raise PgmError("empty or unreadable PGM data") from None
    if magic in (b"P6", b"P3"):
        raise PgmError(f"unsupported color PPM format {magic.decode('ascii')}")
    if magic not in (b"P5", b"P2"):
        raise PgmError(f"bad magic number {magic[:8]!r}: not a PGM file")

    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    if width < 1 or height < 1:
        raise PgmError(f"dimensions out of range: {width}x{height}")
    maxval, pos = _header_int(data, pos, "maxval")
    if maxval < 1 or maxval > 255:
        raise PgmError(f"maxval out of range (want 1..255): {maxval}")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if data[pos : pos + 1] not in _WHITESPACE:
            raise PgmError("malformed header: missing whitespace before raster")
        raster = data[pos + 1 : pos + 1 + count]
        if len(raster) < count:
            raise PgmError(f"truncated pixel data: expected {count} bytes, got {len(raster)}")
        arr = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    else:
        values = []
        for _ in range(count):
            pos = _skip_space_and_comments(data, pos)
            if pos >= len(data):
                raise PgmError(f"truncated pixel data: expected {count} samples, got {len(values)}")
            token, pos = _next_token(data, pos)
            try:
                values.append(int(token))
            except ValueError:
                raise PgmError(f"malformed sample: {token!r}") from None
        arr = np.asarray(values, dtype=np.int64).reshape(height, width)

    if int(arr.max()) > maxval or int(arr.min()) < 0:
        raise PgmError(f"sample value outside [0, {maxval}]")
    return Image(arr, maxval)


def save_pgm(img: Image) -> bytes:
    """Encode an image as binary P5; load_pgm(save_pgm(img)) == img."""
    header = f"P5\n{img.width} {img.height}\n{img.max_value}\n".encode("ascii")
    return header + img.pixels.tobytes()


def read_pgm(path: str | os.PathLike) -> Image:
    with open(path, "rb") as fh:
        return load_pgm(fh.read())


def write_pgm(path: str | os.PathLike, img: Image) -> None:
    with open(path, "wb") as fh:
        fh.write(save_pgm(img))


def block_downsample(img: Image, ratio: int) -> Image:
    """Shrink by an integer ratio, averaging each ratio x ratio block.

    Block means are rounded half up. Width and height must be divisible
    by the ratio.
    """
    if not isinstance(ratio, int) or ratio < 1:
        raise ValueError(f"ratio must be an integer >= 1, got {ratio!r}")
    if img.width % ratio or img.height % ratio:
        raise ValueError(
            f"dimensions {img.width}x{img.height} not divisible by ratio {ratio}"
        )
    out_w = img.width // ratio
    out_h = img.height // ratio
    blocks = img.pixels.astype(np.int64).reshape(out_h, ratio, out_w, ratio)
    sums = blocks.sum(axis=(1, 3))
    # round half up on the exact rational mean: floor(s/r^2 + 1/2)
    denom = ratio * ratio
    means = (2 * sums + denom) // (2 * denom)
    return Image(np.clip(means, 0, img.max_value), img.max_value)
