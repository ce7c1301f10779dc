"""Exact rational linear programming.

Bounded-variable primal simplex on ``max c.x  s.t.  A x = b,  l <= x <= u``
with a sparse dictionary tableau, two phases (one artificial per row) and
Bland's smallest-index rule for both the entering and the blocking variable.
The tableau works in ``gmpy2.mpq``; inputs and results are ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from gmpy2 import mpq

Bound = Optional[Fraction]  # None is -inf for lower bounds and +inf for upper bounds

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _row_dict(row) -> dict[int, Fraction]:
    if isinstance(row, dict):
        items = row.items()
    else:
        items = enumerate(row)
    return {j: Fraction(v) for j, v in items if v != 0}


@dataclass
class LPProblem:
    objective: Sequence
    A: Sequence  # rows, each a dense sequence or a sparse {column: value} dict
    b: Sequence
    lower: Sequence[Bound] = None
    upper: Sequence[Bound] = None

    def __post_init__(self):
        n = len(self.objective)
        self.objective = [Fraction(c) for c in self.objective]
        self.A = [_row_dict(r) for r in self.A]
        self.b = [Fraction(v) for v in self.b]
        if self.lower is None:
            self.lower = [Fraction(0)] * n
        if self.upper is None:
            self.upper = [None] * n
        self.lower = [None if v is None else Fraction(v) for v in self.lower]
        self.upper = [None if v is None else Fraction(v) for v in self.upper]
        if len(self.b) != len(self.A) or len(self.lower) != n or len(self.upper) != n:
            raise ValueError("inconsistent dimensions")
        for row in self.A:
            if row and max(row) >= n:
                raise ValueError("constraint refers to unknown variable")
        for lo, hi in zip(self.lower, self.upper):
            if lo is not None and hi is not None and lo > hi:
                raise ValueError("lower bound exceeds upper bound")

    @property
    def n(self) -> int:
        return len(self.objective)

    @property
    def m(self) -> int:
        return len(self.A)


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    primal: list[Fraction] = field(default_factory=list)
    basis: list[int] = field(default_factory=list)
    pivots: int = 0


class _Tableau:
    def __init__(self, p: LPProblem):
        n, m = p.n, p.m
        self.n, self.m = n, m
        lower = [None if v is None else mpq(v) for v in p.lower]
        upper = [None if v is None else mpq(v) for v in p.upper]
        self.lower = lower + [mpq(0)] * m
        self.upper = upper + [None] * m
        x = []
        for lo, hi in zip(lower, upper):
            x.append(lo if lo is not None else hi if hi is not None else mpq(0))
        rows, basis = [], []
        for i, (row, rhs) in enumerate(zip(p.A, p.b)):
            resid = mpq(rhs) - sum((mpq(v) * x[j] for j, v in row.items()), mpq(0))
            sign = 1 if resid >= 0 else -1
            r = {j: mpq(v) * sign for j, v in row.items()}
            r[n + i] = mpq(1)
            rows.append(r)
            basis.append(n + i)
            x.append(abs(resid))
        self.x = x
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def set_costs(self, costs: dict[int, Fraction]):
        costs = {j: mpq(c) for j, c in costs.items()}
        self.costs = costs
        d = dict(costs)
        for i, row in enumerate(self.rows):
            cb = costs.get(self.basis[i], 0)
            if cb:
                for j, v in row.items():
                    d[j] = d.get(j, 0) - cb * v
        self.d = {j: v for j, v in d.items() if v != 0}

    def _eligible(self, j: int, dj: Fraction) -> bool:
        lo, hi, xj = self.lower[j], self.upper[j], self.x[j]
        if dj > 0:
            return hi is None or xj < hi
        return lo is None or xj > lo

    def step(self) -> Optional[str]:
        """One Bland step; returns a terminal status or None to continue."""
        basic = set(self.basis)
        enter = None
        for j in sorted(self.d):
            if j not in basic and self._eligible(j, self.d[j]):
                enter = j
                break
        if enter is None:
            return OPTIMAL
        direction = 1 if self.d[enter] > 0 else -1

        best_t, best_var, best_row = None, None, None
        lo, hi = self.lower[enter], self.upper[enter]
        if lo is not None and hi is not None:
            best_t, best_var = hi - lo, enter
        for i, row in enumerate(self.rows):
            a = row.get(enter)
            if not a:
                continue
            k = self.basis[i]
            delta = -a * direction
            if delta < 0:
                bound = self.lower[k]
                if bound is None:
                    continue
                t = (self.x[k] - bound) / -delta
            else:
                bound = self.upper[k]
                if bound is None:
                    continue
                t = (bound - self.x[k]) / delta
            if best_t is None or t < best_t or (t == best_t and k < best_var):
                best_t, best_var, best_row = t, k, i
        if best_t is None:
            return UNBOUNDED

        t = best_t
        if t:
            self.x[enter] += direction * t
            for i, row in enumerate(self.rows):
                a = row.get(enter)
                if a:
                    self.x[self.basis[i]] -= a * direction * t
        if best_row is None:
            return None
        leaving = self.basis[best_row]
        # snap the leaving variable exactly onto the bound it hit
        hit_lower = -self.rows[best_row][enter] * direction < 0
        self.x[leaving] = self.lower[leaving] if hit_lower else self.upper[leaving]
        self._pivot(best_row, enter)
        return None

    def _pivot(self, r: int, j: int):
        prow = self.rows[r]
        piv = prow[j]
        prow = {k: v / piv for k, v in prow.items()}
        self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row.get(j)
            if f:
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        f = self.d.get(j)
        if f:
            for k, v in prow.items():
                nv = self.d.get(k, 0) - f * v
                if nv:
                    self.d[k] = nv
                else:
                    self.d.pop(k, None)
        self.basis[r] = j
        self.pivots += 1

    def run(self, max_pivots: int) -> str:
        for _ in range(max_pivots):
            status = self.step()
            if status is not None:
                return status
        raise RuntimeError("pivot limit reached")


def solve_max(p: LPProblem, max_pivots: int = 1_000_000) -> LPResult:
    tab = _Tableau(p)
    n, m = p.n, p.m
    tab.set_costs({n + i: Fraction(-1) for i in range(m)})
    tab.run(max_pivots)
    if any(tab.x[n + i] for i in range(m)):
        return LPResult(INFEASIBLE, pivots=tab.pivots)
    for i in range(m):
        tab.upper[n + i] = mpq(0)
    tab.set_costs({j: c for j, c in enumerate(p.objective) if c})
    status = tab.run(max_pivots)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    primal = [Fraction(v) for v in tab.x[:n]]
    value = sum((c * v for c, v in zip(p.objective, primal)), Fraction(0))
    return LPResult(OPTIMAL, value, primal, list(tab.basis), tab.pivots)


def solve_min(p: LPProblem, max_pivots: int = 1_000_000) -> LPResult:
    neg = LPProblem([-c for c in p.objective], p.A, p.b, p.lower, p.upper)
    r = solve_max(neg, max_pivots)
    if r.status == OPTIMAL:
        r.value = -r.value
    return r


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    k = len(M)
    aug = [list(row) + [v] for row, v in zip(M, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[k] for row in aug]


def check_optimality(p: LPProblem, r: LPResult) -> bool:
    """Re-verify an optimal result from scratch: feasibility plus dual signs for the basis."""
    if r.status != OPTIMAL or len(r.primal) != p.n:
        return False
    x = [Fraction(v) for v in r.primal]
    for xj, lo, hi in zip(x, p.lower, p.upper):
        if (lo is not None and xj < lo) or (hi is not None and xj > hi):
            return False
    for row, rhs in zip(p.A, p.b):
        if sum(v * x[j] for j, v in row.items()) != rhs:
            return False
    if sum(c * v for c, v in zip(p.objective, x)) != r.value:
        return False

    m, n = p.m, p.n
    if len(r.basis) != m or len(set(r.basis)) != m:
        return False
    # transpose of [A | I] restricted to basic columns
    MT = []
    for k in r.basis:
        if k < n:
            MT.append([p.A[i].get(k, Fraction(0)) for i in range(m)])
        else:
            MT.append([Fraction(int(i == k - n)) for i in range(m)])
    cB = [p.objective[k] if k < n else Fraction(0) for k in r.basis]
    y = _solve_square(MT, cB) if m else []
    if y is None:
        return False
    col_dot = [Fraction(0)] * n
    for i, row in enumerate(p.A):
        if y[i]:
            for j, v in row.items():
                col_dot[j] += v * y[i]
    basic = set(r.basis)
    for j in range(n):
        if j in basic:
            continue
        dj = p.objective[j] - col_dot[j]
        lo, hi = p.lower[j], p.upper[j]
        at_lo, at_hi = lo is not None and x[j] == lo, hi is not None and x[j] == hi
        if at_lo and at_hi:
            continue
        if at_lo:
            if dj > 0:
                return False
        elif at_hi:
            if dj < 0:
                return False
        elif dj != 0:
            return False
    return True


def dump_tableau(tab: _Tableau, out: TextIO):
    """Plain-text tableau dump for debugging."""
    out.write(f"basis {tab.basis}\n")
    for i, row in enumerate(tab.rows):
        terms = " ".join(f"{v}*x{j}" for j, v in sorted(row.items()))
        out.write(f"  x{tab.basis[i]} = {tab.x[tab.basis[i]]} | {terms}\n")
    out.write("  d: " + " ".join(f"{v}*x{j}" for j, v in sorted(tab.d.items())) + "\n")
