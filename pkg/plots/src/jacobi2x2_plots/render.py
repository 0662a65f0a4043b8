"""Render variance-sweep CSV files as log-log comparison figures.

This package consumes only the sweep CSV serialization: header
`variance,algorithm,n,mean_residual,max_residual,mean_residual_normalized`,
one row per (variance, algorithm). It deliberately imports nothing from
the solver package; the CSV file is the entire interface.

Plotted y-values are the mean_residual column values exactly -- no
transformation beyond the axis scaling.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import PurePath
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
# content-hashed SVG element ids instead of per-process random ones, so
# identical input yields byte-identical vector output
matplotlib.rcParams["svg.hashsalt"] = "jacobi2x2-plots"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

__all__ = [
    "CSV_HEADER",
    "CsvFormatError",
    "FigureSpec",
    "SweepRow",
    "read_sweep_csv",
    "build_series",
    "render_figure",
    "main",
]

CSV_HEADER = "variance,algorithm,n,mean_residual,max_residual,mean_residual_normalized"

_EXIT_OK = 0
_EXIT_USAGE = 1
_EXIT_FORMAT = 2


class CsvFormatError(ValueError):
    """The input file does not follow the sweep CSV schema."""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


@dataclass(frozen=True)
class SweepRow:
    """One parsed CSV data row."""

    variance: float
    algorithm: str
    n: int
    mean_residual: float
    max_residual: float
    mean_residual_normalized: float


@dataclass(frozen=True)
class FigureSpec:
    """Everything needed to render one comparison figure."""

    csv_path: str
    out_path: str
    title: str = "Mean Frobenius residual vs element variance"
    x_label: str = "variance"
    log_x: bool = True
    log_y: bool = True


def read_sweep_csv(path: str) -> list[SweepRow]:
    """Parse and validate a sweep CSV; raises CsvFormatError or OSError."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError(f"{path}: empty file, expected header {CSV_HEADER!r}") from None
        if header != CSV_HEADER.split(","):
            raise CsvFormatError(f"{path}: bad header {','.join(header)!r}")
        rows: list[SweepRow] = []
        for lineno, rec in enumerate(reader, start=2):
            if not rec:
                continue
            if len(rec) != 6:
                raise CsvFormatError(f"{path}:{lineno}: expected 6 fields, got {len(rec)}")
            try:
                row = SweepRow(
                    variance=float(rec[0]),
                    algorithm=rec[1],
                    n=int(rec[2]),
                    mean_residual=float(rec[3]),
                    max_residual=float(rec[4]),
                    mean_residual_normalized=float(rec[5]),
                )
            except ValueError as exc:
                raise CsvFormatError(f"{path}:{lineno}: {exc}") from None
            if not (math.isfinite(row.variance) and row.variance > 0.0):
                raise CsvFormatError(f"{path}:{lineno}: variance must be positive, got {rec[0]}")
            if not (math.isfinite(row.mean_residual) and row.mean_residual >= 0.0):
                raise CsvFormatError(
                    f"{path}:{lineno}: mean_residual must be non-negative, got {rec[3]}"
                )
            rows.append(row)
    if not rows:
        raise CsvFormatError(f"{path}: no data rows")
    return rows


def build_series(rows: Sequence[SweepRow]) -> dict[str, tuple[list[float], list[float]]]:
    """Group rows into one (variances, mean_residuals) series per algorithm."""
    series: dict[str, tuple[list[float], list[float]]] = {}
    for row in sorted(rows, key=lambda r: r.variance):
        xs, ys = series.setdefault(row.algorithm, ([], []))
        xs.append(row.variance)
        ys.append(row.mean_residual)
    return series


def _build_figure(spec: FigureSpec, series: dict[str, tuple[list[float], list[float]]]):
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name in sorted(series):
        xs, ys = series[name]
        ax.plot(xs, ys, marker="o", markersize=3.5, linewidth=1.2, label=name)
    if spec.log_x:
        ax.set_xscale("log")
    if spec.log_y:
        ax.set_yscale("log")
    ax.set_xlabel(spec.x_label)
    ax.set_ylabel("mean Frobenius residual")
    ax.set_title(spec.title)
    ax.grid(True, which="major", alpha=0.4)
    ax.legend(title="algorithm")
    fig.tight_layout()
    return fig


def render_figure(spec: FigureSpec) -> None:
    """Read the CSV, draw one series per algorithm, write the image file.

    Idempotent: identical CSV and spec produce the same series and point
    coordinates (and identical bytes for SVG output, whose date metadata
    is suppressed).
    """
    series = build_series(read_sweep_csv(spec.csv_path))
    fig = _build_figure(spec, series)
    try:
        if PurePath(spec.out_path).suffix.lower() == ".svg":
            fig.savefig(spec.out_path, metadata={"Date": None})
        else:
            fig.savefig(spec.out_path)
    finally:
        plt.close(fig)


def _build_parser() -> _Parser:
    p = _Parser(prog="render", description="Render a sweep CSV as a log-log comparison figure")
    p.add_argument("--csv", required=True, help="input sweep CSV path")
    p.add_argument("--out", required=True, help="output image path (default format: SVG)")
    p.add_argument("--title", default=FigureSpec.title, help="figure title")
    p.add_argument("--xlabel", default=FigureSpec.x_label, help="x axis label")
    p.add_argument("--raster", action="store_true", help="write raster (PNG) instead of vector")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.out
        suffix = PurePath(out).suffix.lower()
        if not suffix:
            out += ".png" if args.raster else ".svg"
        elif args.raster and suffix != ".png":
            raise _UsageError(f"--raster requires a .png output path, got {out!r}")
        render_figure(
            FigureSpec(csv_path=args.csv, out_path=out, title=args.title, x_label=args.xlabel)
        )
        return _EXIT_OK
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except CsvFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
