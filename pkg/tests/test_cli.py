"""Command-line interface tests: argument handling, exit statuses, CSV
schema, environment override, and byte-level determinism."""
from __future__ import annotations

import os
import subprocess
import sys

import pytest

from jacobi2x2 import SweepConfig, Target, jacobi_improved, run_sweep
from jacobi2x2.cli import CSV_HEADER, ENV_SWEEP_N, main, parse_grid, read_csv, write_csv


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolveCommand:
    def test_improved_solve_output(self, capsys):
        code, out, err = run(["solve", "1", "1", "3"], capsys)
        assert code == 0 and err == ""
        assert "algorithm: improved" in out
        assert "lambda1  = 5.8578643762690485e-01" in out
        e = jacobi_improved((1.0, 1.0, 3.0))
        assert f"lambda2  = {e.lambda2:.16e}" in out
        assert f"c        = {e.rot.c:.16e}" in out
        assert f"s        = {e.rot.s:.16e}" in out
        assert "residual = " in out

    def test_standard_loses_tiny_eigenvalue_where_improved_keeps_it(self, capsys):
        code, out, _ = run(["solve", "1e200", "1", "0", "--alg", "standard"], capsys)
        assert code == 0
        assert "lambda2  = 0.0000000000000000e+00" in out
        code, out, _ = run(["solve", "1e200", "1", "0", "--alg", "improved"], capsys)
        assert code == 0
        assert f"lambda2  = {-1e-200:.16e}" in out

    def test_non_finite_entry_is_a_domain_error(self, capsys):
        code, _, err = run(["solve", "nan", "1", "0"], capsys)
        assert code == 2
        assert "error:" in err

    def test_unknown_algorithm_is_a_usage_error(self, capsys):
        code, _, _ = run(["solve", "1", "1", "3", "--alg", "qr"], capsys)
        assert code == 1

    def test_missing_subcommand_is_a_usage_error(self, capsys):
        assert run([], capsys)[0] == 1
        assert run(["frobnicate"], capsys)[0] == 1

    def test_non_numeric_entry_is_a_usage_error(self, capsys):
        assert run(["solve", "one", "1", "3"], capsys)[0] == 1


class TestParseGrid:
    def test_sixteen_point_grid(self):
        g = parse_grid("1e0:1e300:x1e20")
        assert len(g) == 16
        assert g[0] == 1.0 and g[1] == 1e20
        assert g[-1] == pytest.approx(1e300, rel=1e-12)
        assert all(b > a for a, b in zip(g, g[1:]))

    def test_single_point_grid(self):
        assert parse_grid("2.5:2.5:x10") == (2.5,)

    def test_decreasing_grid(self):
        g = parse_grid("1:1e-8:x1e-2")
        assert len(g) == 5
        assert g[0] == 1.0
        assert all(b < a for a, b in zip(g, g[1:]))

    def test_non_integral_step_count_is_a_domain_error(self, capsys, tmp_path):
        code, _, err = run(
            ["sweep", "--target", "apq", "--grid", "1:10:x2", "--n", "2",
             "--out", str(tmp_path / "x.csv")],
            capsys,
        )
        assert code == 2 and "error:" in err

    def test_malformed_grid_is_a_usage_error(self, capsys, tmp_path):
        for bad in ["abc", "1:2", "1:2:3", "1:2:xty"]:
            code, _, _ = run(
                ["sweep", "--target", "apq", "--grid", bad, "--n", "2",
                 "--out", str(tmp_path / "x.csv")],
                capsys,
            )
            assert code == 1, bad

    def test_negative_endpoint_is_a_domain_error(self, capsys, tmp_path):
        code, _, _ = run(
            ["sweep", "--target", "apq", "--grid=-1e0:1e4:x10", "--n", "2",
             "--out", str(tmp_path / "x.csv")],
            capsys,
        )
        assert code == 2

    def test_step_of_one_is_a_domain_error(self, capsys, tmp_path):
        code, _, _ = run(
            ["sweep", "--target", "apq", "--grid", "1:1:x1", "--n", "2",
             "--out", str(tmp_path / "x.csv")],
            capsys,
        )
        assert code == 2


class TestSweepCommand:
    def test_default_grid_writes_sorted_complete_csv(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, _, err = run(
            ["sweep", "--target", "apq", "--default-grid", "--n", "5", "--out", str(out)],
            capsys,
        )
        assert code == 0, err
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 16 * 3
        rows = [ln.split(",") for ln in lines[1:]]
        keys = [(float(r[0]), r[1]) for r in rows]
        assert keys == sorted(keys)
        assert {r[1] for r in rows} == {"standard", "improved", "naive"}
        assert all(int(r[2]) == 5 for r in rows)
        for r in rows:
            assert float(r[3]) <= float(r[4])  # mean <= max

    def test_csv_round_trip_preserves_records(self, tmp_path):
        cfg = SweepConfig(
            target=Target.APP, variance_grid=(1.0, 1e20), n_matrices=50, seed=3,
            algorithms=("standard", "improved"),
        )
        records = run_sweep(cfg)
        path = str(tmp_path / "rt.csv")
        write_csv(path, records)
        back = read_csv(path)
        assert back == sorted(records, key=lambda r: (r.variance, r.algorithm))

    def test_read_csv_rejects_wrong_header(self, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("var,alg\n1,standard\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_csv(str(p))
        (tmp_path / "empty.csv").write_text("", encoding="utf-8")
        with pytest.raises(ValueError):
            read_csv(str(tmp_path / "empty.csv"))

    def test_identical_invocations_are_byte_identical(self, capsys, tmp_path):
        argv = ["sweep", "--target", "app", "--grid", "1e-40:1e0:x1e10", "--n", "400"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(argv + ["--out", str(a)], capsys)[0] == 0
        assert run(argv + ["--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_seed_changes_output(self, capsys, tmp_path):
        argv = ["sweep", "--target", "apq", "--grid", "1:1:x10", "--n", "50"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(argv + ["--seed", "1", "--out", str(a)], capsys)[0] == 0
        assert run(argv + ["--seed", "2", "--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() != b.read_bytes()

    def test_environment_override_for_n(self, capsys, tmp_path, monkeypatch):
        out = tmp_path / "env.csv"
        monkeypatch.setenv(ENV_SWEEP_N, "7")
        argv = ["sweep", "--target", "apq", "--grid", "1:1:x10", "--out", str(out)]
        assert run(argv, capsys)[0] == 0
        assert all(r.n == 7 for r in read_csv(str(out)))
        # explicit --n wins over the environment
        assert run(argv[:-2] + ["--n", "3", "--out", str(out)], capsys)[0] == 0
        assert all(r.n == 3 for r in read_csv(str(out)))
        monkeypatch.setenv(ENV_SWEEP_N, "not-a-number")
        code, _, err = run(argv, capsys)
        assert code == 2 and ENV_SWEEP_N in err

    def test_unwritable_output_path_is_an_io_error(self, capsys):
        code, _, err = run(
            ["sweep", "--target", "apq", "--grid", "1:1:x10", "--n", "2",
             "--out", "/nonexistent-dir/x.csv"],
            capsys,
        )
        assert code == 1 and "error:" in err

    def test_default_grid_disambiguation(self, capsys, tmp_path):
        out = str(tmp_path / "g.csv")
        # app has two default grids; bare --default-grid is ambiguous
        code, _, _ = run(
            ["sweep", "--target", "app", "--default-grid", "--n", "2", "--out", out],
            capsys,
        )
        assert code == 1
        # apq has no large grid
        code, _, _ = run(
            ["sweep", "--target", "apq", "--default-grid", "large", "--n", "2", "--out", out],
            capsys,
        )
        assert code == 1
        for which, first_variance in [("large", 1.0), ("small", 1e-300)]:
            code, _, _ = run(
                ["sweep", "--target", "app", "--default-grid", which, "--n", "2", "--out", out],
                capsys,
            )
            assert code == 0
            assert read_csv(out)[0].variance == first_variance

    def test_algorithm_selection(self, capsys, tmp_path):
        out = str(tmp_path / "algs.csv")
        code, _, _ = run(
            ["sweep", "--target", "apq", "--grid", "1:1:x10", "--n", "4",
             "--algs", "improved", "--out", out],
            capsys,
        )
        assert code == 0
        recs = read_csv(out)
        assert [r.algorithm for r in recs] == ["improved"]
        code, _, _ = run(
            ["sweep", "--target", "apq", "--grid", "1:1:x10", "--n", "4",
             "--algs", "improved,qr", "--out", out],
            capsys,
        )
        assert code == 2


def test_installed_console_script_smoke():
    env = dict(os.environ)
    proc = subprocess.run(
        ["jacobi2x2", "solve", "7", "0", "-2"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0, proc.stderr
    assert "lambda1  = 7.0000000000000000e+00" in proc.stdout


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "jacobi2x2.cli", "solve", "0", "1", "0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "lambda2  = 1.0000000000000000e+00" in proc.stdout
