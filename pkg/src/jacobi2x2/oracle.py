"""Extended-precision reference solver and ulp utilities.

The oracle recomputes the hypot-based rotation entirely in double-double
arithmetic (an unevaluated pair of binary64 values, ~106 significand
bits), giving at least 25 correct significant digits for normal inputs.
That is 50+ bits of headroom beyond binary64, enough to adjudicate every
ulp-level claim made about the working-precision kernels.

Only the operations the oracle needs are provided; this is not a general
double-double library. The rounded-to-binary64 value of a DDouble is its
`hi` component (guaranteed by the normalization invariant).
"""
from __future__ import annotations

import math
import struct
from typing import NamedTuple

from ._eft import quick_two_sum, two_prod, two_sum
from .core import NonFiniteError, SymMat2

__all__ = [
    "DDouble",
    "EigenDD",
    "dd_from_float",
    "dd_add",
    "dd_sub",
    "dd_neg",
    "dd_mul",
    "dd_div",
    "dd_sqrt",
    "dd_ldexp",
    "dd_hypot",
    "oracle_eigen",
    "ulp_diff",
]


class DDouble(NamedTuple):
    """Unevaluated sum hi + lo with |lo| <= ulp(hi)/2."""

    hi: float
    lo: float


class EigenDD(NamedTuple):
    """Rotation and eigenvalues of a SymMat2 in double-double precision."""

    c: DDouble
    s: DDouble
    lambda1: DDouble
    lambda2: DDouble


_ZERO = DDouble(0.0, 0.0)
_ONE = DDouble(1.0, 0.0)


def dd_from_float(x: float) -> DDouble:
    """Lift an exact binary64 value into double-double."""
    return DDouble(x, 0.0)


def dd_neg(x: DDouble) -> DDouble:
    return DDouble(-x.hi, -x.lo)


def dd_add(x: DDouble, y: DDouble) -> DDouble:
    """Accurate sum; relative error <= 2**-104 for finite results."""
    s, e = two_sum(x.hi, y.hi)
    t, f = two_sum(x.lo, y.lo)
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    hi, lo = quick_two_sum(s, e)
    return DDouble(hi, lo)


def dd_sub(x: DDouble, y: DDouble) -> DDouble:
    return dd_add(x, dd_neg(y))


def dd_mul(x: DDouble, y: DDouble) -> DDouble:
    """Product via two_prod; relative error <= 2**-103.

    Raises OverflowError when the result leaves the double-double range,
    e.g. (2**512, 0) * (2**512, 0).
    """
    p, e = two_prod(x.hi, y.hi)
    e += (x.hi * y.lo + x.lo * y.hi) + x.lo * y.lo
    hi, lo = quick_two_sum(p, e)
    if not math.isfinite(hi):
        raise OverflowError("double-double multiplication overflowed")
    return DDouble(hi, lo)


def dd_div(x: DDouble, y: DDouble) -> DDouble:
    """Quotient by three-term long division; relative error <= 2**-102."""
    q1 = x.hi / y.hi
    r = dd_sub(x, dd_mul(y, dd_from_float(q1)))
    q2 = r.hi / y.hi
    r = dd_sub(r, dd_mul(y, dd_from_float(q2)))
    q3 = r.hi / y.hi
    s, e = quick_two_sum(q1, q2)
    hi, lo = quick_two_sum(s, e + q3)
    return DDouble(hi, lo)


def dd_sqrt(x: DDouble) -> DDouble:
    """Square root with one Newton refinement; relative error <= 2**-103.

    Raises ValueError for negative input.
    """
    if x.hi < 0.0:
        raise ValueError("dd_sqrt of a negative value")
    if x.hi == 0.0:
        return _ZERO
    y0 = math.sqrt(x.hi)
    ph, pl = two_prod(y0, y0)
    d = dd_sub(x, DDouble(ph, pl))
    corr = (d.hi + d.lo) / (2.0 * y0)
    hi, lo = quick_two_sum(y0, corr)
    return DDouble(hi, lo)


def dd_ldexp(x: DDouble, k: int) -> DDouble:
    """Scale by 2**k, exact while both components stay normal."""
    return DDouble(math.ldexp(x.hi, k), math.ldexp(x.lo, k))


def dd_hypot(x: DDouble, y: DDouble) -> DDouble:
    """sqrt(x^2 + y^2) in double-double for finite inputs.

    Both arguments are scaled by one exact power of two before squaring,
    preserving the error-free transformations; components whose scaled
    square underflows contribute less than 2**-110 relative and may be
    lost harmlessly.
    """
    ax = abs(x.hi)
    ay = abs(y.hi)
    m = ax if ax >= ay else ay
    if m == 0.0:
        return _ZERO
    e = math.frexp(m)[1]
    xs = dd_ldexp(x, -e)
    ys = dd_ldexp(y, -e)
    s = dd_add(dd_mul(xs, xs), dd_mul(ys, ys))
    return dd_ldexp(dd_sqrt(s), e)


def oracle_eigen(A: SymMat2) -> EigenDD:
    """Run the hypot-form rotation construction entirely in double-double.

    Accurate to >= 25 significant digits when the entries and eigenvalues
    are normal binary64 numbers. Raises NonFiniteError for non-finite
    input and OverflowError when an intermediate leaves the
    double-double range.
    """
    a_pp, a_pq, a_qq = A
    if not (math.isfinite(a_pp) and math.isfinite(a_pq) and math.isfinite(a_qq)):
        raise NonFiniteError(
            f"matrix entries must be finite, got ({a_pp!r}, {a_pq!r}, {a_qq!r})"
        )
    if a_pq == 0.0:
        return EigenDD(_ONE, _ZERO, dd_from_float(a_pp), dd_from_float(a_qq))
    gh, gl = two_sum(a_qq, -a_pp)
    if not math.isfinite(gh):
        raise OverflowError("eigenvalue gap exceeds double-double range")
    delta = DDouble(0.5 * gh, 0.5 * gl)  # exact halving
    apq = dd_from_float(a_pq)
    try:
        h = dd_hypot(apq, delta)
        denom = dd_add(delta, h) if delta.hi >= 0.0 else dd_sub(delta, h)
        t = dd_div(apq, denom)
        c = dd_div(_ONE, dd_sqrt(dd_add(_ONE, dd_mul(t, t))))
        s = dd_mul(t, c)
        tapq = dd_mul(t, apq)
        lam1 = dd_sub(dd_from_float(a_pp), tapq)
        lam2 = dd_add(dd_from_float(a_qq), tapq)
    except OverflowError as exc:
        raise OverflowError("oracle intermediate exceeds double-double range") from exc
    if not (math.isfinite(lam1.hi) and math.isfinite(lam2.hi)):
        raise OverflowError("oracle eigenvalue exceeds double-double range")
    return EigenDD(c, s, lam1, lam2)


def _ordered(x: float) -> int:
    """Map binary64 to integers so adjacent floats differ by exactly 1."""
    (b,) = struct.unpack("<Q", struct.pack("<d", x))
    return b if b < 1 << 63 else (1 << 63) - b


def ulp_diff(x: float, y: float) -> int:
    """Count representable binary64 steps between x and y (0 if equal).

    Both inputs must be finite and share a sign (either may be zero);
    NaN or opposite-sign nonzero inputs raise ValueError.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError("ulp_diff requires finite inputs")
    if x == y:
        return 0
    if (x > 0.0 > y) or (x < 0.0 < y):
        raise ValueError("ulp_diff of opposite-sign nonzero values")
    return abs(_ordered(x) - _ordered(y))
