"""Vectorized twins of the scalar kernels, plus the deterministic RNG.

Every array routine here replays the scalar code path operation for
operation. All operations involved (+, -, *, /, sqrt, abs, max/min,
ldexp/frexp and branch selection) are correctly rounded or exact under
IEEE 754, so results are bit-identical to looping the scalar functions;
the test suite enforces that equivalence. The naive solver uses libm
trigonometry whose vector forms need not match scalar libm calls, so its
batch variant is an explicit Python loop.

Inputs to the array kernels are assumed finite (the experiment module
only feeds generated, validated data); special-case handling lives in
the scalar API.
"""
from __future__ import annotations

import numpy as np

from .core import SymMat2, _TINY_RATIO, naive_direct

_SPLIT = 134217729.0  # 2**27 + 1

# splitmix64 mixing constants.
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_INV_2_53 = 2.0 ** -53


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Counter-based splitmix64 words for stream positions [start, start+count)."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    z = np.uint64(seed) + (idx + np.uint64(1)) * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform [0, 1) doubles with 53 random bits per draw."""
    return (splitmix64(seed, start, count) >> np.uint64(11)) * _INV_2_53


def standard_normals(n: int, seed: int) -> np.ndarray:
    """First n variates of the seeded standard-normal stream.

    Marsaglia polar transform over consecutive uniform pairs: candidate
    pair k uses stream positions (2k, 2k+1); accepted pairs contribute
    two variates each, in candidate order. The construction is exact
    except for log and sqrt; sqrt is correctly rounded everywhere, so
    reproducibility across platforms rests on the platform log only.
    """
    out = np.empty(n, dtype=np.float64)
    filled = 0
    pos = 0
    block = 1 << 17  # uniforms per batch, i.e. 2**16 candidate pairs
    while filled < n:
        u = uniforms(seed, pos, block)
        pos += block
        x = 2.0 * u[0::2] - 1.0
        y = 2.0 * u[1::2] - 1.0
        s = x * x + y * y
        ok = (s > 0.0) & (s < 1.0)
        xs = x[ok]
        ys = y[ok]
        ss = s[ok]
        f = np.sqrt(-2.0 * np.log(ss) / ss)
        z = np.empty(2 * xs.size, dtype=np.float64)
        z[0::2] = xs * f
        z[1::2] = ys * f
        take = min(z.size, n - filled)
        out[filled : filled + take] = z[:take]
        filled += take
    return out


def normal_matrices(n: int, seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(a_pp, a_pq, a_qq) columns for n matrices, three variates per matrix."""
    z = standard_normals(3 * n, seed)
    return z[0::3].copy(), z[1::3].copy(), z[2::3].copy()


def _two_prod(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = a * b
    t = _SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def hypot_arr(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise robust_hypot for finite inputs."""
    x = np.abs(a)
    y = np.abs(b)
    x, y = np.maximum(x, y), np.minimum(x, y)
    small = y <= x * _TINY_RATIO
    with np.errstate(all="ignore"):
        e = np.frexp(x)[1]
        xs = np.ldexp(x, -e)
        ys = np.where(small, 0.5, np.ldexp(y, -e))
        ph, pl = _two_prod(xs, xs)
        qh, ql = _two_prod(ys, ys)
        sh = ph + qh
        t = sh - ph
        se = ((ph - (sh - t)) + (qh - t)) + pl + ql
        r = np.sqrt(sh)
        rh, rl = _two_prod(r, r)
        corr = ((sh - rh) - rl + se) / (2.0 * r)
        out = np.ldexp(r + corr, e)
    return np.where(small, x, out)


def _finish_arr(app, apq, aqq, t):
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    lam1 = app - t * apq
    lam2 = aqq + t * apq
    return c, s, lam1, lam2


def solve_standard_arr(app, apq, aqq):
    """Vector twin of jacobi_standard; returns (c, s, lambda1, lambda2)."""
    with np.errstate(all="ignore"):
        delta = (aqq - app) / (2.0 * apq)
        root = np.sqrt(1.0 + delta * delta)  # overflows to inf exactly as scalar
        t = np.where(delta >= 0.0, 1.0 / (delta + root), 1.0 / (delta - root))
        t = np.where(apq != 0.0, t, 0.0)
        return _finish_arr(app, apq, aqq, t)


def solve_improved_arr(app, apq, aqq):
    """Vector twin of jacobi_improved; returns (c, s, lambda1, lambda2)."""
    with np.errstate(all="ignore"):
        delta = (aqq - app) / 2.0
        h = hypot_arr(apq, delta)
        t = np.where(delta >= 0.0, apq / (delta + h), apq / (delta - h))
        t = np.where(apq != 0.0, t, 0.0)
        return _finish_arr(app, apq, aqq, t)


def solve_naive_loop(app, apq, aqq):
    """Batch naive_direct via scalar calls (trig is not safely vectorizable)."""
    cs = []
    ss = []
    l1 = []
    l2 = []
    for m in zip(app.tolist(), apq.tolist(), aqq.tolist()):
        (c, s), lam1, lam2 = naive_direct(SymMat2(*m))
        cs.append(c)
        ss.append(s)
        l1.append(lam1)
        l2.append(lam2)
    return (
        np.asarray(cs, dtype=np.float64),
        np.asarray(ss, dtype=np.float64),
        np.asarray(l1, dtype=np.float64),
        np.asarray(l2, dtype=np.float64),
    )


def residual_arr(app, apq, aqq, c, s, lam1, lam2):
    """Vector twin of residual_fro."""
    with np.errstate(all="ignore"):
        r11 = (app * c - apq * s) - c * lam1
        r12 = (app * s + apq * c) - s * lam2
        r21 = (apq * c - aqq * s) + s * lam1
        r22 = (apq * s + aqq * c) - c * lam2
    return hypot_arr(hypot_arr(r11, r12), hypot_arr(r21, r22))


def fro_arr(app, apq, aqq):
    """Vector twin of fro_norm."""
    return hypot_arr(hypot_arr(app, apq), hypot_arr(apq, aqq))


BATCH_SOLVERS = {
    "standard": solve_standard_arr,
    "improved": solve_improved_arr,
    "naive": solve_naive_loop,
}
