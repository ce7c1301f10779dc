"""Orientation, Euler and discrete Godbillon-Vey cocycles, plus cochain helpers."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations
from typing import Callable, Sequence

from .plcircle import PLMap, canonical_lift, compose, left_slope_log2, right_slope_log2


def orientation(x, y, z) -> int:
    """Circular order of three points of ``R/Z``: +1 counterclockwise, -1 clockwise, 0 if degenerate."""
    x, y, z = (Fraction(t) % 1 for t in (x, y, z))
    if x == y or y == z or x == z:
        return 0
    # (x, y, z) is counterclockwise iff it is a cyclic rotation of an increasing triple
    if (x < y < z) or (y < z < x) or (z < x < y):
        return 1
    return -1


def euler_cocycle(u: PLMap, v: PLMap) -> int:
    """Integer ``m`` with ``s(u) s(v) = s(uv) + m`` for the section ``s`` with ``s(t)(0)`` in ``[0, 1)``."""
    su, sv, suv = canonical_lift(u), canonical_lift(v), canonical_lift(compose(u, v))
    m = su(sv(0)) - suv(0)
    assert m.denominator == 1
    return int(m)


def _slope_jump(f: PLMap, x: Fraction) -> int:
    return right_slope_log2(f, x) - left_slope_log2(f, x)


def gv(u: PLMap, v: PLMap) -> int:
    """Discrete Godbillon-Vey cocycle: sum over breakpoints of 2x2 log-slope determinants."""
    uv = compose(u, v)
    total = 0
    for x in set(v.breakpoints) | set(u.breakpoints) | set(uv.breakpoints):
        a, b = right_slope_log2(v, x), right_slope_log2(uv, x)
        c, d = _slope_jump(v, x), _slope_jump(uv, x)
        total += a * d - b * c
    return total


def check_inhomogeneous_cocycle(c: Callable, g: PLMap, h: PLMap, k: PLMap, mul=compose) -> Fraction:
    """``c(h,k) - c(gh,k) + c(g,hk) - c(g,h)``; zero iff the cocycle identity holds at ``(g,h,k)``."""
    return Fraction(c(h, k) - c(mul(g, h), k) + c(g, mul(h, k)) - c(g, h))


def perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alt_n(c: Callable, args: Sequence) -> Fraction:
    """Alternation ``1/(n+1)! * sum sign(s) c(args permuted by s)`` of a homogeneous cochain."""
    k = len(args)
    total = Fraction(0)
    for p in permutations(range(k)):
        total += perm_sign(p) * Fraction(c(*(args[i] for i in p)))
    return total / math.factorial(k)
