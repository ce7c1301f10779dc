"""Machine check of the bound ``|Theta| <= 2/3`` for the alternated product cocycle.

``Theta = alt(omega x Or)`` is evaluated on five points.  The circle side is
captured by a weak circular order of the five labels (which points coincide
and in what cyclic order the distinct ones sit); the group side by the ten
values of an alternating 2-cochain ``omega`` on the triples of ``{0..4}``.
Maximizing over all ``omega`` with ``|omega| <= 1`` and ``delta omega = 0``
is a 10-variable LP per pattern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Mapping

from sympy.utilities.iterables import multiset_partitions

from .cocycles import orientation, perm_sign
from .lp import OPTIMAL, LPProblem, check_optimality, solve_max

LABELS = tuple(range(5))
TRIPLES = tuple(combinations(LABELS, 3))
QUADS = tuple(combinations(LABELS, 4))
PERMS = tuple(permutations(LABELS))
SIGNS = {p: perm_sign(p) for p in PERMS}
BOUND = Fraction(2, 3)


@dataclass(frozen=True)
class CircularPattern:
    """Blocks of coinciding labels in cyclic order; the block holding 0 comes first."""

    blocks: tuple[frozenset, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {lab: i for i, blk in enumerate(self.blocks) for lab in blk}

    @cached_property
    def _or_table(self) -> dict[tuple, int]:
        pos, m = self.position, len(self.blocks)
        return {
            t: orientation(*(Fraction(pos[v], m) for v in t))
            for t in permutations(LABELS, 3)
        }

    def orientation(self, i: int, j: int, k: int) -> int:
        if i == j or j == k or i == k:
            return 0
        return self._or_table[i, j, k]

    def relabel(self, pi) -> CircularPattern:
        """Pattern whose orientation at ``(i, j, k)`` is ours at ``(pi i, pi j, pi k)``."""
        inv = {pi[i]: i for i in LABELS}
        blocks = [frozenset(inv[x] for x in blk) for blk in self.blocks]
        return _canonical(blocks)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def __str__(self) -> str:
        return " < ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)


def _canonical(blocks) -> CircularPattern:
    k = next(i for i, b in enumerate(blocks) if 0 in b)
    return CircularPattern(tuple(blocks[k:]) + tuple(blocks[:k]))


def pattern_from_points(xs) -> CircularPattern:
    """Weak circular order realised by five points of ``R/Z``."""
    xs = [Fraction(x) % 1 for x in xs]
    values = sorted(set(xs))
    return _canonical([frozenset(i for i in LABELS if xs[i] == v) for v in values])


def enumerate_patterns() -> list[CircularPattern]:
    out = []
    for part in multiset_partitions(list(LABELS)):
        first, rest = part[0], part[1:]  # the block containing 0 is listed first
        for order in permutations(rest):
            out.append(CircularPattern(tuple(frozenset(b) for b in (first, *order))))
    return out


class AlternatingCochain5:
    """Alternating function on ordered triples of labels, given by its values on sorted triples."""

    def __init__(self, values: Mapping[tuple, Fraction] | None = None):
        values = dict(values or {})
        self.values = {t: Fraction(values.get(t, 0)) for t in TRIPLES}

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        if i == j or j == k or i == k:
            return Fraction(0)
        t = (i, j, k)
        s = tuple(sorted(t))
        return self.values[s] * perm_sign([s.index(v) for v in t])

    def relabel(self, pi) -> AlternatingCochain5:
        return AlternatingCochain5({t: self(*(pi[v] for v in t)) for t in TRIPLES})

    def coboundary(self, i, j, k, l) -> Fraction:
        return self(j, k, l) - self(i, k, l) + self(i, j, l) - self(i, j, k)

    def sup_norm(self) -> Fraction:
        return max(abs(v) for v in self.values.values())


def theta_eval(omega: AlternatingCochain5, pat: CircularPattern) -> Fraction:
    total = Fraction(0)
    for s in PERMS:
        o = pat.orientation(s[2], s[3], s[4])
        if o:
            total += SIGNS[s] * o * omega(s[0], s[1], s[2])
    return total / math.factorial(5)


# (omega slots, Or slots, sign) for the six terms, in tau-relative positions
_A_TERMS = (
    ((0, 1, 2), (0, 3, 4), 1),
    ((0, 3, 4), (0, 1, 2), 1),
    ((0, 1, 3), (0, 2, 4), -1),
    ((0, 2, 4), (0, 1, 3), -1),
    ((0, 1, 4), (0, 2, 3), 1),
    ((0, 2, 3), (0, 1, 4), 1),
)


def a_k_eval(omega: AlternatingCochain5, pat: CircularPattern, k: int) -> Fraction:
    if k not in range(5):
        raise ValueError("k must be in 0..4")
    tau = [(i + k) % 5 for i in LABELS]
    total = Fraction(0)
    for w, o, sign in _A_TERMS:
        total += sign * omega(*(tau[i] for i in w)) * pat.orientation(*(tau[i] for i in o))
    return total


def theta_via_a_k(omega: AlternatingCochain5, pat: CircularPattern) -> Fraction:
    return sum((a_k_eval(omega, pat, k) for k in LABELS), Fraction(0)) / 30


def theta_coefficients(pat: CircularPattern) -> list[Fraction]:
    """Theta is linear in omega; its coefficient on each sorted triple."""
    return [theta_eval(AlternatingCochain5({t: 1}), pat) for t in TRIPLES]


def cocycle_rows() -> list[list[int]]:
    rows = []
    for quad in QUADS:
        row = [0] * len(TRIPLES)
        for drop in range(4):
            face = quad[:drop] + quad[drop + 1:]
            row[TRIPLES.index(face)] = (-1) ** drop
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ThetaMax:
    pattern: CircularPattern
    value: Fraction
    omega: AlternatingCochain5
    certified: bool


def max_theta_lp(pat: CircularPattern) -> ThetaMax:
    p = LPProblem(
        theta_coefficients(pat),
        cocycle_rows(),
        [0] * len(QUADS),
        [-1] * len(TRIPLES),
        [1] * len(TRIPLES),
    )
    r = solve_max(p)
    if r.status != OPTIMAL:
        raise RuntimeError(f"theta LP for {pat} ended {r.status}")
    omega = AlternatingCochain5(dict(zip(TRIPLES, r.primal)))
    return ThetaMax(pat, r.value, omega, check_optimality(p, r))


def max_theta(pat: CircularPattern) -> Fraction:
    return max_theta_lp(pat).value


def count_nonvanishing_permutations(pat: CircularPattern) -> int:
    return sum(1 for s in PERMS if pat.orientation(s[2], s[3], s[4]))


def verify_theta_bound() -> dict:
    """Solve all pattern LPs; report per-pattern maxima and the global maximum."""
    results = [max_theta_lp(p) for p in enumerate_patterns()]
    worst = max(r.value for r in results)
    return {
        "patterns": [
            {
                "pattern": str(r.pattern),
                "shape": list(r.pattern.shape),
                "max_theta": str(r.value),
                "certified": r.certified,
                "omega": {"".join(map(str, t)): str(v) for t, v in r.omega.values.items()},
            }
            for r in results
        ],
        "count": len(results),
        "global_max": str(worst),
        "bound": str(BOUND),
        "holds": worst <= BOUND and all(r.certified for r in results),
    }
