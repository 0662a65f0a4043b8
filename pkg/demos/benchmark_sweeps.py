"""Run the three benchmark sweeps and write their CSV files.

Each sweep scales one element of a fixed set of random unit-normal
symmetric matrices through 16 variances and records mean/max Frobenius
residuals per algorithm. The written CSVs are exactly what the
`jacobi2x2 sweep` subcommand produces and what the plot package reads.

Run:  python3 demos/benchmark_sweeps.py [n_matrices] [outdir]
"""
import os
import sys

from jacobi2x2 import DEFAULT_SEED, SweepConfig, Target, default_grids, run_sweep
from jacobi2x2.cli import write_csv


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
    outdir = sys.argv[2] if len(sys.argv) > 2 else "."
    os.makedirs(outdir, exist_ok=True)
    grids = default_grids()
    sweeps = [
        ("offdiagonal_shrink.csv", Target.APQ, grids.apq),
        ("diagonal_grow.csv", Target.APP, grids.app_large),
        ("diagonal_shrink.csv", Target.APP, grids.app_small),
    ]
    for fname, target, grid in sweeps:
        cfg = SweepConfig(
            target=target,
            variance_grid=grid,
            n_matrices=n,
            seed=DEFAULT_SEED,
            algorithms=("standard", "improved", "naive"),
        )
        records = run_sweep(cfg)
        path = f"{outdir}/{fname}"
        write_csv(path, records)
        print(f"wrote {path} ({len(records)} rows, n={n})")
        print(f"  {'variance':>9s} {'classic mean':>13s} {'hypot mean':>13s} {'ratio':>7s}")
        by_v = {}
        for r in records:
            by_v.setdefault(r.variance, {})[r.algorithm] = r.mean_residual
        for v in grid:
            std, imp = by_v[v]["standard"], by_v[v]["improved"]
            print(f"  {v:9.0e} {std:13.4e} {imp:13.4e} {imp / std:7.3f}")
        print()


if __name__ == "__main__":
    main()
