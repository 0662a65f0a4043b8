"""Error-free transformations shared by the kernels and the oracle.

Each function returns an (value, error) pair such that value + error equals
the exact result of the underlying operation, provided no overflow occurs.
All operations assume round-to-nearest binary64 and must not be rewritten
with fused multiply-add or reassociation.
"""
from __future__ import annotations

# Dekker split constant, 2**27 + 1.
SPLIT = 134217729.0


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Return (s, e) with s = fl(a+b) and s + e = a + b exactly."""
    s = a + b
    t = s - a
    e = (a - (s - t)) + (b - t)
    return s, e


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """two_sum requiring |a| >= |b| (or a == 0); one branchless round cheaper."""
    s = a + b
    e = b - (s - a)
    return s, e


def split(a: float) -> tuple[float, float]:
    """Dekker split of a into high and low parts with at most 26 bits each."""
    t = SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Return (p, e) with p = fl(a*b) and p + e = a * b exactly."""
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e
