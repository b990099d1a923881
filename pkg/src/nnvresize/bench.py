"""Benchmark harness: shrink originals, upscale back with each method,
and collect PSNR/MSE plus wall-clock time per (image, method, ratio)."""

from __future__ import annotations

import platform
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .image import Image, block_downsample
from .metrics import psnr
from .nnv import resample_nnv
from .resample import resample_bicubic, resample_bilinear, resample_nn

RESAMPLERS: dict[str, Callable[[Image, int], Image]] = {
    "nn": resample_nn,
    "bilinear": resample_bilinear,
    "bicubic": resample_bicubic,
    "nnv": resample_nnv,
}

METHOD_ORDER = ("nn", "bilinear", "bicubic", "nnv")

CSV_HEADER = "image,method,ratio,psnr_db,mse,wall_time_s"


@dataclass(frozen=True)
class BenchRow:
    image_name: str
    method: str
    ratio: int
    psnr_db: float | None
    mse: float
    wall_time_s: float


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    environment: str


def get_resampler(method: str) -> Callable[[Image, int], Image]:
    try:
        return RESAMPLERS[method]
    except KeyError:
        known = ", ".join(sorted(RESAMPLERS))
        raise ValueError(f"unknown method {method!r} (known: {known})") from None


def describe_environment() -> str:
    return (
        f"{platform.platform()}; python {platform.python_version()};"
        f" numpy {np.__version__}"
    )


def time_resample(
    resampler: Callable[[Image, int], Image], img: Image, ratio: int, repeats: int = 5
) -> tuple[Image, float]:
    """Run the resampler repeatedly; return its output and the median
    wall time of the calls alone (no I/O, single thread)."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    times = []
    out = img
    for _ in range(repeats):
        start = time.perf_counter()
        out = resampler(img, ratio)
        times.append(time.perf_counter() - start)
    return out, statistics.median(times)


def run_benchmark(
    originals: Sequence[tuple[str, Image]],
    ratios: Iterable[int],
    methods: Sequence[str] = METHOD_ORDER,
    repeats: int = 5,
) -> BenchReport:
    """Full cross product: for every original and ratio, downsample by the
    ratio, upscale back with every method, and score against the original.

    Rows come out in (image, ratio, method) order. Methods run
    sequentially so their timings do not contaminate each other.
    """
    originals = list(originals)
    ratios = list(ratios)
    if not originals:
        raise ValueError("no input images")
    if not ratios:
        raise ValueError("no ratios requested")
    resamplers = [(m, get_resampler(m)) for m in methods]
    if not resamplers:
        raise ValueError("no methods requested")

    rows = []
    for name, img in originals:
        for ratio in ratios:
            small = block_downsample(img, ratio)
            for method, fn in resamplers:
                upscaled, wall = time_resample(fn, small, ratio, repeats)
                report = psnr(img, upscaled)
                rows.append(
                    BenchRow(
                        image_name=name,
                        method=method,
                        ratio=ratio,
                        psnr_db=report.psnr_db,
                        mse=report.mse,
                        wall_time_s=wall,
                    )
                )
    return BenchReport(rows=tuple(rows), environment=describe_environment())


def _fmt_psnr(value: float | None) -> str:
    return "undefined" if value is None else f"{value:.4f}"


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    """CSV text with fixed-format numeric columns; everything except
    wall_time_s is deterministic across runs."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.image_name},{r.method},{r.ratio},"
            f"{_fmt_psnr(r.psnr_db)},{r.mse:.6f},{r.wall_time_s:.6f}"
        )
    return "\n".join(lines) + "\n"


def report_markdown(report: BenchReport) -> str:
    """Per-ratio tables, one row per image, PSNR columns then time columns."""
    ratios = list(dict.fromkeys(r.ratio for r in report.rows))
    methods = list(dict.fromkeys(r.method for r in report.rows))
    images = list(dict.fromkeys(r.image_name for r in report.rows))
    by_key = {(r.image_name, r.method, r.ratio): r for r in report.rows}

    lines = ["# Upscale benchmark", "", f"Environment: {report.environment}"]
    for ratio in ratios:
        header = (
            ["image"]
            + [f"{m} PSNR (dB)" for m in methods]
            + [f"{m} time (s)" for m in methods]
        )
        lines += ["", f"## ratio = {ratio}", ""]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for name in images:
            cells = [name]
            picked = [by_key[(name, m, ratio)] for m in methods]
            cells += [_fmt_psnr(r.psnr_db) for r in picked]
            cells += [f"{r.wall_time_s:.6f}" for r in picked]
            lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
