"""Numerical kernels for the symmetric 2x2 eigenproblem.

This module provides two constructions of a Jacobi rotation V = [[c, s],
[-s, c]] that diagonalizes a real symmetric 2x2 matrix, a deliberately
naive closed-form solver used as a third comparison point, and the
supporting pieces: an overflow-safe hypot, rotation application, and the
Frobenius residual ||A V - V L||_F.

`jacobi_standard` keeps the textbook formulation verbatim, including its
intermediate overflow when the tangent ratio is squared. That behavior is
the point of the benchmark; do not "fix" it. `jacobi_improved` rewrites
the tangent with hypot so no intermediate can overflow before the result
does.

All functions are pure and thread-safe. Eigenvalues are unordered;
lambda1 always occupies the (1,1) slot of V^T A V, i.e. lambda1 =
a_pp - t*a_pq.
"""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

from ._eft import two_prod, two_sum

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
]

# Below this ratio the smaller leg cannot change a correctly rounded
# hypot: y <= x * 2**-27 implies sqrt(x^2 + y^2) - x < ulp(x)/4.
_TINY_RATIO = 2.0 ** -27


class SymMat2(NamedTuple):
    """Real symmetric 2x2 matrix; only one off-diagonal entry is stored."""

    a_pp: float
    a_pq: float
    a_qq: float


class Rotation2(NamedTuple):
    """Givens rotation (c, s) denoting V = [[c, s], [-s, c]]."""

    c: float
    s: float


class Eigen2(NamedTuple):
    """A rotation plus the two unordered eigenvalues it exposes."""

    rot: Rotation2
    lambda1: float
    lambda2: float


class NonFiniteError(ValueError):
    """Raised when a solver receives a NaN or infinite matrix entry."""


def _check_finite(a_pp: float, a_pq: float, a_qq: float) -> None:
    if not (math.isfinite(a_pp) and math.isfinite(a_pq) and math.isfinite(a_qq)):
        raise NonFiniteError(
            f"matrix entries must be finite, got ({a_pp!r}, {a_pq!r}, {a_qq!r})"
        )


def robust_hypot(a: float, b: float) -> float:
    """Return sqrt(a*a + b*b) without spurious overflow or underflow.

    The result is correctly rounded for finite inputs: the larger leg is
    scaled to [0.5, 1) by an exact power of two, the sum of squares is
    accumulated in double-double, and one Newton step refines the square
    root before unscaling. Overflow happens only when the true result
    exceeds the largest finite binary64.

    Special cases follow the usual convention: +inf if either input is
    infinite (even when the other is NaN), NaN if one input is NaN and
    neither is infinite, and 0 only when both inputs are zero.
    """
    x = abs(a)
    y = abs(b)
    if x == math.inf or y == math.inf:
        return math.inf
    if x != x or y != y:
        return math.nan
    if x < y:
        x, y = y, x
    if y <= x * _TINY_RATIO:
        # Covers y == 0; the true result rounds to x.
        return x
    e = math.frexp(x)[1]
    xs = math.ldexp(x, -e)  # exact, xs in [0.5, 1)
    ys = math.ldexp(y, -e)  # exact, ys >= xs * 2**-27 so never subnormal
    ph, pl = two_prod(xs, xs)
    qh, ql = two_prod(ys, ys)
    sh, se = two_sum(ph, qh)
    se += pl + ql
    r = math.sqrt(sh)
    rh, rl = two_prod(r, r)
    corr = ((sh - rh) - rl + se) / (2.0 * r)
    try:
        return math.ldexp(r + corr, e)
    except OverflowError:
        return math.inf


def _finish(a_pp: float, a_pq: float, a_qq: float, t: float) -> Eigen2:
    # Shared tail of both Jacobi algorithms.
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    lam1 = a_pp - t * a_pq
    lam2 = a_qq + t * a_pq
    return Eigen2(Rotation2(c, s), lam1, lam2)


def jacobi_standard(A: SymMat2) -> Eigen2:
    """Construct the annihilating rotation by the classic stable recipe.

    t = sign(delta) / (|delta| + sqrt(1 + delta^2)) with
    delta = (a_qq - a_pp) / (2 a_pq). The expression 1 + delta*delta is
    evaluated naively: for |delta| > ~1.34e154 it overflows to infinity,
    t collapses to +-0, and the smaller eigenvalue is lost. This faithful
    weakness is what the benchmark measures.
    """
    a_pp, a_pq, a_qq = A
    _check_finite(a_pp, a_pq, a_qq)
    if a_pq != 0.0:
        delta = (a_qq - a_pp) / (2.0 * a_pq)
        root = math.sqrt(1.0 + delta * delta)  # may overflow to inf
        if delta >= 0.0:
            t = 1.0 / (delta + root)
        else:
            t = 1.0 / (delta - root)
    else:
        t = 0.0
    return _finish(a_pp, a_pq, a_qq, t)


def jacobi_improved(A: SymMat2) -> Eigen2:
    """Construct the annihilating rotation via the hypot form of t.

    t = a_pq / (delta + sign(delta) * hypot(a_pq, delta)) with
    delta = (a_qq - a_pp) / 2. Rationalizing the classic formula this way
    removes the unscaled delta^2, so intermediates stay finite whenever
    the inputs are finite and hypot quality is the only rounding hazard.
    """
    a_pp, a_pq, a_qq = A
    _check_finite(a_pp, a_pq, a_qq)
    if a_pq != 0.0:
        delta = (a_qq - a_pp) / 2.0
        h = robust_hypot(a_pq, delta)
        if delta >= 0.0:
            t = a_pq / (delta + h)
        else:
            t = a_pq / (delta - h)
    else:
        t = 0.0
    return _finish(a_pp, a_pq, a_qq, t)


def naive_direct(A: SymMat2) -> Eigen2:
    """Closed-form angle solver with naively squared Rayleigh quotients.

    theta = atan2(2 a_pq, a_qq - a_pp) / 2 gives the rotation directly;
    the eigenvalues are then assembled as c^2 a_pp -+ 2cs a_pq + s^2 a_qq,
    which squares and cancels where the Jacobi forms do not. This is a
    deliberately weak baseline, not a recommended algorithm. When
    a_pq == 0 the atan2 convention may put theta at pi/2, swapping the
    (legal, unordered) eigenvalue slots.
    """
    a_pp, a_pq, a_qq = A
    _check_finite(a_pp, a_pq, a_qq)
    theta = 0.5 * math.atan2(2.0 * a_pq, a_qq - a_pp)
    c = math.cos(theta)
    s = math.sin(theta)
    lam1 = c * c * a_pp - 2.0 * c * s * a_pq + s * s * a_qq
    lam2 = s * s * a_pp + 2.0 * c * s * a_pq + c * c * a_qq
    return Eigen2(Rotation2(c, s), lam1, lam2)


def apply_rotation(A: SymMat2, rot: Rotation2) -> tuple[float, float, float, float]:
    """Return the full product V^T A V as (m11, m12, m21, m22).

    Both off-diagonal slots are returned; they differ only by rounding.
    Inputs are assumed finite; no validation is performed.
    """
    a_pp, a_pq, a_qq = A
    c, s = rot
    av11 = a_pp * c - a_pq * s
    av12 = a_pp * s + a_pq * c
    av21 = a_pq * c - a_qq * s
    av22 = a_pq * s + a_qq * c
    m11 = c * av11 - s * av21
    m12 = c * av12 - s * av22
    m21 = s * av11 + c * av21
    m22 = s * av12 + c * av22
    return (m11, m12, m21, m22)


def residual_fro(A: SymMat2, e: Eigen2) -> float:
    """Return ||A V - V L||_F for the eigenpair e of A.

    The four residual entries are formed in binary64 and combined with
    robust_hypot chaining, so the norm cannot overflow unless an entry
    itself does. Inputs are assumed finite; the result is >= 0.
    """
    a_pp, a_pq, a_qq = A
    (c, s), lam1, lam2 = e
    r11 = (a_pp * c - a_pq * s) - c * lam1
    r12 = (a_pp * s + a_pq * c) - s * lam2
    r21 = (a_pq * c - a_qq * s) + s * lam1
    r22 = (a_pq * s + a_qq * c) - c * lam2
    return robust_hypot(robust_hypot(r11, r12), robust_hypot(r21, r22))


def fro_norm(A: SymMat2) -> float:
    """Return ||A||_F over all four entries (the off-diagonal counts twice)."""
    a_pp, a_pq, a_qq = A
    return robust_hypot(robust_hypot(a_pp, a_pq), robust_hypot(a_pq, a_qq))


SOLVERS: dict[str, Callable[[SymMat2], Eigen2]] = {
    "standard": jacobi_standard,
    "improved": jacobi_improved,
    "naive": naive_direct,
}
