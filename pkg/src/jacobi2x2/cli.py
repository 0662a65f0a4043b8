"""Command-line front end: solve one matrix, or sweep and emit CSV.

Exit statuses: 0 success, 1 usage or I/O error, 2 numeric-domain error
(non-finite input, invalid variance values, and similar).

The sweep CSV schema is the serialization boundary consumed by the plot
component: header `variance,algorithm,n,mean_residual,max_residual,
mean_residual_normalized`, one row per (variance, algorithm), rows
sorted by variance then algorithm name, every float printed with 17
significant digits (lossless round-trip), UTF-8 with LF line endings.
"""
from __future__ import annotations

import argparse
import math
import os
import re
import sys
from typing import Sequence

from .core import SOLVERS, NonFiniteError, SymMat2, residual_fro
from .experiment import (
    DEFAULT_N,
    DEFAULT_SEED,
    SweepConfig,
    SweepRecord,
    Target,
    default_grids,
    run_sweep,
)

__all__ = ["main", "parse_grid", "write_csv", "read_csv", "CSV_HEADER", "ENV_SWEEP_N"]

CSV_HEADER = "variance,algorithm,n,mean_residual,max_residual,mean_residual_normalized"

# Overrides the default sweep size when --n is not given.
ENV_SWEEP_N = "JACOBI2X2_SWEEP_N"

_EXIT_OK = 0
_EXIT_USAGE = 1
_EXIT_DOMAIN = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


_GRID_RE = re.compile(r"^([^:]+):([^:]+):[xX](.+)$")


def parse_grid(spec: str) -> tuple[float, ...]:
    """Expand a START:END:xSTEP multiplicative grid spec.

    The step count is inferred from the logarithmic ratio (which must be
    integral); values are enumerated by repeated multiplication so the
    grid is reproducible independent of any pow() implementation.
    """
    m = _GRID_RE.match(spec)
    if not m:
        raise _UsageError(f"invalid grid spec {spec!r}, expected START:END:xSTEP")
    try:
        start, end, step = (float(g) for g in m.groups())
    except ValueError:
        raise _UsageError(f"invalid grid spec {spec!r}: non-numeric field") from None
    for name, v in (("START", start), ("END", end)):
        if not (math.isfinite(v) and v > 0.0):
            raise ValueError(f"grid {name} must be positive and finite, got {v!r}")
    if not math.isfinite(step) or step <= 0.0 or step == 1.0:
        raise ValueError(f"grid STEP must be positive, finite and != 1, got {step!r}")
    ratio = math.log(end / start) / math.log(step)
    count = round(ratio)
    if count < 0 or abs(ratio - count) > 1e-6:
        raise ValueError(
            f"grid spec {spec!r}: STEP does not step from START to END an integral number of times"
        )
    vals = [start]
    for _ in range(count):
        vals.append(vals[-1] * step)
    return tuple(vals)


def write_csv(path: str, records: Sequence[SweepRecord]) -> None:
    """Write records sorted by (variance, algorithm) in the mandated schema."""
    rows = sorted(records, key=lambda r: (r.variance, r.algorithm))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in rows:
            fh.write(
                f"{r.variance:.16e},{r.algorithm},{r.n},"
                f"{r.mean_residual:.16e},{r.max_residual:.16e},"
                f"{r.mean_residual_normalized:.16e}\n"
            )


def read_csv(path: str) -> list[SweepRecord]:
    """Parse a sweep CSV; raises ValueError on a missing or wrong header."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: missing mandated CSV header")
    records = []
    for ln in lines[1:]:
        if not ln:
            continue
        v, alg, n, mean_r, max_r, mean_rn = ln.split(",")
        records.append(
            SweepRecord(
                variance=float(v),
                algorithm=alg,
                n=int(n),
                mean_residual=float(mean_r),
                max_residual=float(max_r),
                mean_residual_normalized=float(mean_rn),
            )
        )
    return records


def _build_parser() -> _Parser:
    p = _Parser(prog="jacobi2x2", description="Symmetric 2x2 Jacobi rotation kernels and residual benchmark")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve one symmetric 2x2 matrix")
    ps.add_argument("a_pp", type=float, help="top-left entry")
    ps.add_argument("a_pq", type=float, help="off-diagonal entry")
    ps.add_argument("a_qq", type=float, help="bottom-right entry")
    ps.add_argument("--alg", choices=sorted(SOLVERS), default="improved", help="algorithm (default: improved)")

    pw = sub.add_parser("sweep", help="run a variance sweep and write CSV")
    pw.add_argument("--target", choices=[t.value for t in Target], required=True, help="element whose variance is swept")
    grid = pw.add_mutually_exclusive_group(required=True)
    grid.add_argument("--grid", metavar="START:END:xSTEP", help="multiplicative variance grid")
    grid.add_argument(
        "--default-grid",
        nargs="?",
        const="auto",
        choices=["auto", "large", "small"],
        dest="default_grid",
        help="use the built-in 16-point grid (for --target app say which: large or small)",
    )
    pw.add_argument("--n", type=int, default=None, help=f"matrices per point (default {DEFAULT_N}, or ${ENV_SWEEP_N})")
    pw.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"generator seed (default {DEFAULT_SEED})")
    pw.add_argument("--algs", default="standard,improved,naive", help="comma-separated algorithms")
    pw.add_argument("--out", required=True, help="output CSV path")
    return p


def _cmd_solve(args: argparse.Namespace) -> int:
    A = SymMat2(args.a_pp, args.a_pq, args.a_qq)
    e = SOLVERS[args.alg](A)
    print(f"algorithm: {args.alg}")
    print(f"c        = {e.rot.c:.16e}")
    print(f"s        = {e.rot.s:.16e}")
    print(f"lambda1  = {e.lambda1:.16e}")
    print(f"lambda2  = {e.lambda2:.16e}")
    print(f"residual = {residual_fro(A, e):.16e}")
    return _EXIT_OK


def _pick_default_grid(target: Target, which: str) -> tuple[float, ...]:
    grids = default_grids()
    if target is Target.APQ:
        if which in ("auto", "small"):
            return grids.apq
        raise _UsageError("--target apq has no large default grid")
    if which == "large":
        return grids.app_large
    if which == "small":
        return grids.app_small
    raise _UsageError("--target app needs --default-grid large or --default-grid small")


def _cmd_sweep(args: argparse.Namespace) -> int:
    target = Target(args.target)
    if args.grid is not None:
        grid = parse_grid(args.grid)
    else:
        grid = _pick_default_grid(target, args.default_grid)
    if args.n is not None:
        n = args.n
    else:
        raw = os.environ.get(ENV_SWEEP_N)
        try:
            n = int(raw) if raw is not None else DEFAULT_N
        except ValueError:
            raise ValueError(f"{ENV_SWEEP_N} must be an integer, got {raw!r}") from None
    algs = tuple(a.strip() for a in args.algs.split(",") if a.strip())
    cfg = SweepConfig(
        target=target,
        variance_grid=grid,
        n_matrices=n,
        seed=args.seed,
        algorithms=algs,
    )
    write_csv(args.out, run_sweep(cfg))
    return _EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return _cmd_solve(args)
        return _cmd_sweep(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (NonFiniteError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
