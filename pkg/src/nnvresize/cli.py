"""Command-line front end: scale, metrics, downsample, bench."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import METHOD_ORDER, RESAMPLERS, get_resampler, report_markdown, rows_to_csv, run_benchmark
from .image import PgmError, block_downsample, read_pgm, write_pgm
from .metrics import psnr


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    return [_positive_int(part) for part in text.split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnvresize",
        description="Grayscale PGM upscaling (nn, bilinear, bicubic, nnv) with PSNR/timing benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scale = sub.add_parser("scale", help="upscale a PGM by an integer ratio")
    p_scale.add_argument("input", help="source PGM (P5 or P2)")
    p_scale.add_argument("output", help="destination PGM (written as P5)")
    p_scale.add_argument("--method", choices=sorted(RESAMPLERS), default="nnv")
    p_scale.add_argument("--ratio", type=_positive_int, default=2)

    p_metrics = sub.add_parser("metrics", help="MSE and PSNR between two PGMs")
    p_metrics.add_argument("reference")
    p_metrics.add_argument("test")

    p_down = sub.add_parser("downsample", help="block-average a PGM by an integer ratio")
    p_down.add_argument("input")
    p_down.add_argument("output")
    p_down.add_argument("--ratio", type=_positive_int, default=2)

    p_bench = sub.add_parser(
        "bench",
        help="downsample each PGM in a directory, upscale back with every method, report PSNR and wall time",
    )
    p_bench.add_argument("directory", help="directory of original PGM images")
    p_bench.add_argument("--ratios", type=_int_list, default=[2, 4], metavar="N,N")
    p_bench.add_argument(
        "--methods",
        default=",".join(METHOD_ORDER),
        metavar="M,M",
        help=f"comma-separated subset of: {','.join(METHOD_ORDER)}",
    )
    p_bench.add_argument("--csv", required=True, help="output CSV path")
    p_bench.add_argument("--markdown", help="also write the markdown table here")
    p_bench.add_argument("--repeats", type=_positive_int, default=5, help="timing repetitions (median is reported)")
    return parser


def cmd_scale(args) -> int:
    img = read_pgm(args.input)
    out = get_resampler(args.method)(img, args.ratio)
    write_pgm(args.output, out)
    print(
        f"{args.input} {img.width}x{img.height} -> {args.output} "
        f"{out.width}x{out.height} [{args.method}, ratio {args.ratio}]"
    )
    return 0


def cmd_metrics(args) -> int:
    reference = read_pgm(args.reference)
    test = read_pgm(args.test)
    report = psnr(reference, test)
    print(f"MSE: {report.mse:.6f}")
    if report.psnr_db is None:
        print("PSNR: undefined (images are identical)")
    else:
        print(f"PSNR: {report.psnr_db:.4f} dB")
    return 0


def cmd_downsample(args) -> int:
    img = read_pgm(args.input)
    out = block_downsample(img, args.ratio)
    write_pgm(args.output, out)
    print(
        f"{args.input} {img.width}x{img.height} -> {args.output} "
        f"{out.width}x{out.height} [block mean, ratio {args.ratio}]"
    )
    return 0


def cmd_bench(args) -> int:
    directory = Path(args.directory)
    paths = sorted(directory.glob("*.pgm"))
    if not paths:
        raise ValueError(f"no .pgm files found in {directory}")
    originals = [(path.stem, read_pgm(path)) for path in paths]
    methods = [m for m in args.methods.split(",") if m]
    report = run_benchmark(originals, args.ratios, methods, repeats=args.repeats)

    Path(args.csv).write_text(rows_to_csv(report.rows), encoding="ascii")
    markdown = report_markdown(report)
    if args.markdown:
        Path(args.markdown).write_text(markdown, encoding="ascii")
    print(markdown, end="")
    print(f"wrote {len(report.rows)} rows to {args.csv}", file=sys.stderr)
    return 0


_COMMANDS = {
    "scale": cmd_scale,
    "metrics": cmd_metrics,
    "downsample": cmd_downsample,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PgmError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
