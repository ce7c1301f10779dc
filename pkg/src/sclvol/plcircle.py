"""Elements of Thompson's group T as exact piecewise-linear circle maps.

A map is stored on the fundamental domain ``[0, 1)`` by its breakpoints, the
images of the breakpoints and the ``log2`` of the slope on each piece; the
last piece wraps around through ``1 == 0``.  Only genuine breakpoints are
kept, so equal maps are equal as values.  A rotation has no breakpoints and
is stored with the single marker point ``0``.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .numerics import format_dyadic, is_dyadic, log2_exact, parse_dyadic

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def pow2(k: int) -> Fraction:
    return Fraction(1 << k) if k >= 0 else Fraction(1, 1 << -k)


def _frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


@dataclass(frozen=True)
class PLMap:
    points: tuple[Fraction, ...]
    images: tuple[Fraction, ...]
    slopes: tuple[int, ...]

    @classmethod
    def from_pieces(cls, pieces: Iterable[tuple]) -> PLMap:
        """Build from ``(x, f(x), log2 slope on [x, next x))`` triples.

        Triples may come in any order and may contain points where the slope
        does not change; they are sorted, pruned and validated.
        """
        triples = sorted(
            (Fraction(x) % 1, Fraction(y) % 1, int(s)) for x, y, s in pieces
        )
        if not triples:
            raise ValueError("empty map")
        xs = [t[0] for t in triples]
        if len(set(xs)) != len(xs):
            raise ValueError("repeated breakpoint")
        _validate(triples)
        kept = [t for i, t in enumerate(triples) if t[2] != triples[i - 1][2]]
        if not kept:
            x, y, s = triples[0]
            if s != 0:
                raise ValueError("constant slope must be 1")
            kept = [(ZERO, (y - x) % 1, 0)]
        return cls(
            tuple(t[0] for t in kept),
            tuple(t[1] for t in kept),
            tuple(t[2] for t in kept),
        )

    @classmethod
    def identity(cls) -> PLMap:
        return cls((ZERO,), (ZERO,), (0,))

    @classmethod
    def rotation(cls, c) -> PLMap:
        c = Fraction(c) % 1
        if not is_dyadic(c):
            raise ValueError("rotation amount must be dyadic")
        return cls((ZERO,), (c,), (0,))

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return self.points if len(self.points) > 1 else ()

    def is_identity(self) -> bool:
        return self == _IDENTITY

    def _piece(self, x: Fraction) -> int:
        return bisect_right(self.points, x) - 1  # -1 selects the wrapping piece

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __mul__(self, other: PLMap) -> PLMap:
        return compose(self, other)

    @cached_property
    def inverse(self) -> PLMap:
        return PLMap.from_pieces(zip(self.images, self.points, (-s for s in self.slopes)))

    def __pow__(self, n: int) -> PLMap:
        base = self if n >= 0 else self.inverse
        result, n = _IDENTITY, abs(n)
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def pieces(self) -> list[tuple[Fraction, Fraction, int]]:
        """Linearity intervals ``(left, right, log2 slope)`` covering ``[0, 1)``."""
        cuts = sorted(set(self.points) | {ZERO})
        ends = cuts[1:] + [ONE]
        return [(l, r, right_slope_log2(self, l)) for l, r in zip(cuts, ends)]

    def to_records(self) -> list[dict]:
        return [
            {"breakpoint": format_dyadic(x), "image": format_dyadic(y), "slope_log2": s}
            for x, y, s in zip(self.points, self.images, self.slopes)
        ]

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> PLMap:
        return cls.from_pieces(
            (parse_dyadic(r["breakpoint"]), parse_dyadic(r["image"]), int(r["slope_log2"]))
            for r in records
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{x}->{y}:{s:+d}" for x, y, s in zip(self.points, self.images, self.slopes)
        )
        return f"PLMap({body})"


def _validate(triples):
    total = ZERO
    n = len(triples)
    for i, (x, y, s) in enumerate(triples):
        if not (is_dyadic(x) and is_dyadic(y)):
            raise ValueError("breakpoints and images must be dyadic")
        nx, ny, _ = triples[(i + 1) % n]
        length = (nx - x) % 1 or ONE
        img_len = pow2(s) * length
        if (y + img_len - ny) % 1 != 0:
            raise ValueError("pieces do not join up")
        total += img_len
    if total != 1:
        raise ValueError("map is not a circle bijection")


_IDENTITY = PLMap.identity()


def _check_unit(x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"{x} outside [0, 1)")
    return x


def evaluate(f: PLMap, x) -> Fraction:
    """Exact image of ``x`` in ``[0, 1)``; works for any rational ``x``, not just dyadics."""
    x = _check_unit(x)
    i = f._piece(x)
    dx = x - f.points[i]
    if dx < 0:
        dx += 1
    return (f.images[i] + pow2(f.slopes[i]) * dx) % 1


def right_slope_log2(f: PLMap, x) -> int:
    return f.slopes[f._piece(_check_unit(x))]


def left_slope_log2(f: PLMap, x) -> int:
    """``log2`` of the slope just left of ``x``; left of 0 means left of 1."""
    x = _check_unit(x)
    return f.slopes[bisect_left(f.points, x) - 1]


def compose(f: PLMap, g: PLMap) -> PLMap:
    """``f o g``."""
    if f.is_identity():
        return g
    if g.is_identity():
        return f
    g_inv = g.inverse
    cand = set(g.points)
    cand.update(evaluate(g_inv, p) for p in f.points)
    triples = []
    for x in cand:
        y = evaluate(g, x)
        triples.append((x, evaluate(f, y), right_slope_log2(g, x) + right_slope_log2(f, y)))
    return PLMap.from_pieces(triples)


@dataclass(frozen=True)
class Lift:
    """The lift ``x -> offset + F(x)`` of ``base``, ``F`` the canonical lift with ``F(0)`` in ``[0, 1)``."""

    base: PLMap
    offset: int = 0

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        n = math.floor(x)
        r = x - n
        f = self.base
        y0 = evaluate(f, ZERO)
        return y0 + (evaluate(f, r) - y0) % 1 + n + self.offset


def canonical_lift(f: PLMap) -> Lift:
    return Lift(f, 0)


def builder_t_n(n: int) -> PLMap:
    """Element cyclically permuting the orbit ``0, 1/2, 3/4, ..., 1 - 2^-(n-1)``."""
    if n < 1:
        raise ValueError("n must be positive")
    orbit = [ONE - pow2(-k) for k in range(n)]
    ends = orbit[1:] + [ONE]
    gaps = [r - l for l, r in zip(orbit, ends)]
    pieces = []
    for k in range(n):
        nxt = (k + 1) % n
        pieces.append((orbit[k], orbit[nxt], log2_exact(gaps[nxt] / gaps[k])))
    return PLMap.from_pieces(pieces)


# a and b are two-breakpoint elements of F rescaled to [1/2, 1] and [0, 1/2].
# Both are the identity near 0; a has slope 2 just right of 1/2 and b has
# slope 1/2 just left of 1/2.


def builder_a() -> PLMap:
    q = Fraction
    return PLMap.from_pieces([
        (0, 0, 0),
        (HALF, HALF, 1),
        (q(5, 8), q(3, 4), -1),
        (q(7, 8), q(7, 8), 0),
    ])


def builder_b() -> PLMap:
    q = Fraction
    return PLMap.from_pieces([
        (0, 0, 0),
        (q(1, 8), q(1, 8), 1),
        (q(1, 4), q(3, 8), -1),
        (HALF, HALF, 0),
    ])
