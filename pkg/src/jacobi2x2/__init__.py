"""Jacobi rotations for real symmetric 2x2 matrices, with a benchmark harness.

Two constructions of the annihilating rotation are provided: the classic
formulation (`jacobi_standard`), whose intermediate delta^2 overflows
under extreme element scaling, and a hypot-based rewrite
(`jacobi_improved`) that stays accurate wherever the inputs are finite.
A deliberately naive closed-form solver (`naive_direct`) serves as a
third comparison point. The `experiment` module reproduces the
residual-vs-variance benchmark; the `oracle` module supplies a
double-double reference solver for ulp-level validation.
"""
from .core import (
    Eigen2,
    NonFiniteError,
    Rotation2,
    SOLVERS,
    SymMat2,
    apply_rotation,
    fro_norm,
    jacobi_improved,
    jacobi_standard,
    naive_direct,
    residual_fro,
    robust_hypot,
)
from .experiment import (
    DEFAULT_N,
    DEFAULT_SEED,
    FULL_N,
    DefaultGrids,
    SweepConfig,
    SweepRecord,
    Target,
    default_grids,
    generate_test_set,
    run_sweep,
    scale_element,
)
from .oracle import (
    DDouble,
    EigenDD,
    dd_add,
    dd_div,
    dd_from_float,
    dd_hypot,
    dd_mul,
    dd_sqrt,
    dd_sub,
    oracle_eigen,
    ulp_diff,
)

__version__ = "0.1.0"

__all__ = [
    "SymMat2",
    "Rotation2",
    "Eigen2",
    "NonFiniteError",
    "robust_hypot",
    "jacobi_standard",
    "jacobi_improved",
    "naive_direct",
    "apply_rotation",
    "residual_fro",
    "fro_norm",
    "SOLVERS",
    "Target",
    "SweepConfig",
    "SweepRecord",
    "DefaultGrids",
    "DEFAULT_N",
    "FULL_N",
    "DEFAULT_SEED",
    "generate_test_set",
    "scale_element",
    "run_sweep",
    "default_grids",
    "DDouble",
    "EigenDD",
    "dd_from_float",
    "dd_add",
    "dd_sub",
    "dd_mul",
    "dd_div",
    "dd_sqrt",
    "dd_hypot",
    "oracle_eigen",
    "ulp_diff",
    "__version__",
]
