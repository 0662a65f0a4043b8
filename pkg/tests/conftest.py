"""Shared fixtures: the seeded data sets several suites reuse.

Generating the 100k-matrix unit-scale set once per session keeps the
acceptance runtime limits honest about solve/check work rather than
repeated generation.
"""
from __future__ import annotations

import numpy as np
import pytest

from jacobi2x2 import DEFAULT_SEED
from jacobi2x2 import _batch

UNIT_N = 100_000
ORACLE_N = 10_000


@pytest.fixture(scope="session")
def unit_arrays() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Entry columns of the 100k standard-normal matrices at the pinned seed."""
    return _batch.normal_matrices(UNIT_N, DEFAULT_SEED)


@pytest.fixture(scope="session")
def unit_solutions(unit_arrays):
    """Batch (c, s, lambda1, lambda2) per Jacobi algorithm on the unit set."""
    app, apq, aqq = unit_arrays
    return {
        "standard": _batch.solve_standard_arr(app, apq, aqq),
        "improved": _batch.solve_improved_arr(app, apq, aqq),
    }


@pytest.fixture(scope="session")
def oracle_arrays() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """10k matrices with entries uniform in [-10, 10], deterministic."""
    u = _batch.uniforms(DEFAULT_SEED, 0, 3 * ORACLE_N)
    entries = u * 20.0 - 10.0
    return entries[0::3], entries[1::3], entries[2::3]
