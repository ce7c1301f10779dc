"""Exact rotation numbers on the Euler extension via periodic orbits of lifts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .extensions import TTildeElem
from .plcircle import canonical_lift, pow2

DEFAULT_QMAX = 64


class RotationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RotResult:
    value: Fraction
    period: int
    shift: int
    witness: Fraction


def lift_of(x: TTildeElem):
    """The homeomorphism of R represented by ``x``: ``y -> z + s(t)(y)``."""
    s = canonical_lift(x.t)
    return lambda y: x.z + s(y)


def _periodic_point(y: TTildeElem, p: int):
    """A point ``w`` in ``[0, 1)`` with ``G(w) = w + p`` for the lift ``G`` of ``y``, or None."""
    lift = lift_of(y)
    for l, r, s in y.t.pieces():
        h_l = lift(l) - l  # G(x) - x at the left end of the piece
        if s == 0:
            if h_l == p:
                return l
            continue
        w = l + (p - h_l) / (pow2(s) - 1)
        if l <= w < r:
            return w
    return None


def _orbit_of_zero(x: TTildeElem, q_max: int) -> RotResult | None:
    # cheap pre-pass by point iteration; all periodic orbits share one period
    lift = lift_of(x)
    y = Fraction(0)
    for q in range(1, q_max + 1):
        y = lift(y)
        if y.denominator == 1:
            return RotResult(Fraction(int(y), q), q, int(y), Fraction(0))
    return None


def rot_exact(x: TTildeElem, q_max: int = DEFAULT_QMAX) -> RotResult:
    if q_max < 1:
        raise ValueError("q_max must be positive")
    hit = _orbit_of_zero(x, q_max)
    if hit is not None:
        return hit
    y = x
    for q in range(1, q_max + 1):
        c0 = lift_of(y)(0)
        lo, hi = math.floor(c0 - 1), math.ceil(c0 + 1)
        for p in sorted(range(lo, hi + 1), key=lambda p: (abs(p), p)):
            w = _periodic_point(y, p)
            if w is not None:
                return RotResult(Fraction(p, q), q, p, w)
        y = y * x
    raise RotationCapExceeded(f"no periodic orbit of period <= {q_max}")


def verify_witness(x: TTildeElem, r: RotResult) -> bool:
    """Re-check ``F^q(w) = w + p`` by iterating the lift ``q`` times."""
    lift = lift_of(x)
    w = r.witness
    for _ in range(r.period):
        w = lift(w)
    return w == r.witness + r.shift


def rot(x: TTildeElem, q_max: int = DEFAULT_QMAX) -> Fraction:
    return rot_exact(x, q_max).value


def rot_bounds(x: TTildeElem, n_iters: int) -> tuple[Fraction, Fraction]:
    if n_iters < 1:
        raise ValueError("n_iters must be positive")
    c = lift_of(x ** n_iters)(0)
    return (c - 1) / n_iters, (c + 1) / n_iters


def defect_sample(pairs: Iterable[tuple[TTildeElem, TTildeElem]], q_max: int = DEFAULT_QMAX) -> Fraction:
    worst = Fraction(0)
    for x, y in pairs:
        d = abs(rot(x * y, q_max) - rot(x, q_max) - rot(y, q_max))
        worst = max(worst, d)
    return worst
