"""Filling norms in the (reduced) bar complex of a free group, bounded above by exact LPs.

Words are tuples of non-zero integers: ``k`` is the k-th generator and ``-k``
its inverse.  In the reduced complex the identity is dropped from 1-chains
and bar pairs with an identity entry are zero.
"""

from __future__ import annotations

import string
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .lp import OPTIMAL, LPProblem, solve_min

Word = tuple
EMPTY: Word = ()

# ---------------------------------------------------------------- words


def reduce_word(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def wmul(u: Word, v: Word) -> Word:
    k = 0
    while k < len(u) and k < len(v) and u[-1 - k] == -v[k]:
        k += 1
    return u[: len(u) - k] + v[k:]


def winv(u: Word) -> Word:
    return tuple(-x for x in reversed(u))


def wpow(u: Word, n: int) -> Word:
    base = u if n >= 0 else winv(u)
    out = EMPTY
    for _ in range(abs(n)):
        out = wmul(out, base)
    return out


def commutator(u: Word, v: Word) -> Word:
    return wmul(wmul(u, v), wmul(winv(u), winv(v)))


def parse_word(s: str) -> Word:
    """Letters ``a..z`` are generators, ``A..Z`` their inverses, ``[x,y]`` is ``x y X Y``."""
    pos = 0

    def parse_seq(stop: str) -> Word:
        nonlocal pos
        w = EMPTY
        while pos < len(s) and s[pos] not in stop:
            c = s[pos]
            if c.isspace():
                pos += 1
            elif c == "[":
                pos += 1
                left = parse_seq(",")
                if pos >= len(s) or s[pos] != ",":
                    raise ValueError(f"expected ',' in {s!r}")
                pos += 1
                right = parse_seq("]")
                if pos >= len(s) or s[pos] != "]":
                    raise ValueError(f"expected ']' in {s!r}")
                pos += 1
                w = wmul(w, commutator(left, right))
            elif c in string.ascii_lowercase:
                w = wmul(w, (ord(c) - ord("a") + 1,))
                pos += 1
            elif c in string.ascii_uppercase:
                w = wmul(w, (-(ord(c) - ord("A") + 1),))
                pos += 1
            else:
                raise ValueError(f"unexpected {c!r} in {s!r}")
        return w

    w = parse_seq("")
    return w


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return "".join(
        chr(ord("a") + x - 1) if x > 0 else chr(ord("A") - x - 1) for x in w
    )


def word_rank(w: Word) -> int:
    return max((abs(x) for x in w), default=0)


# ---------------------------------------------------------------- chains

Chain1 = dict  # Word -> Fraction, identity never present
Chain2 = dict  # (Word, Word) -> Fraction


def _add(chain: dict, key, c):
    v = chain.get(key, 0) + c
    if v:
        chain[key] = v
    else:
        chain.pop(key, None)


def pair_boundary(g: Word, h: Word) -> Chain1:
    out: Chain1 = {}
    if not g or not h:
        return out
    for w, c in ((g, 1), (h, 1), (wmul(g, h), -1)):
        if w:
            _add(out, w, Fraction(c))
    return out


def boundary2(b: Chain2) -> Chain1:
    out: Chain1 = {}
    for (g, h), c in b.items():
        for w, v in pair_boundary(g, h).items():
            _add(out, w, c * v)
    return out


def boundary3(t: dict) -> Chain2:
    """``(g,h,k) -> (h,k) - (gh,k) + (g,hk) - (g,h)`` with identity entries dropped."""
    out: Chain2 = {}
    for (g, h, k), c in t.items():
        if not (g and h and k):
            continue
        for pair, s in (((h, k), 1), ((wmul(g, h), k), -1), ((g, wmul(h, k)), 1), ((g, h), -1)):
            if pair[0] and pair[1]:
                _add(out, pair, c * s)
    return out


def abelianization(c: Chain1, rank: Optional[int] = None) -> tuple[Fraction, ...]:
    """Image of a 1-chain in ``H_1 = Z^rank``; every boundary maps to zero."""
    rank = rank or max((word_rank(w) for w in c), default=0)
    out = [Fraction(0)] * rank
    for w, v in c.items():
        for x in w:
            out[abs(x) - 1] += v if x > 0 else -v
    return tuple(out)


def l1_norm(chain: dict) -> Fraction:
    return sum((abs(v) for v in chain.values()), Fraction(0))


# ---------------------------------------------------------------- supports


def support_ball(generators: Iterable[int], radius: int) -> list[Word]:
    """All reduced words of length at most ``radius`` in the given generators."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    letters = [g for x in generators for g in (x, -x)]
    layer = [EMPTY]
    out = [EMPTY]
    for _ in range(radius):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]
        out.extend(layer)
    return out


def factor_support(w: Word) -> list[Word]:
    """Contiguous subwords of ``w`` and their inverses."""
    seen = {EMPTY}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            seen.add(w[i:j])
            seen.add(winv(w[i:j]))
    return sorted(seen, key=lambda u: (len(u), u))


def default_support(w: Word, radius: int) -> list[Word]:
    rank = max(word_rank(w), 1)
    return sorted(set(factor_support(w)) | set(support_ball(range(1, rank + 1), radius)),
                  key=lambda u: (len(u), u))


def bar_pairs(support: Iterable[Word], closed: bool = True) -> list[tuple[Word, Word]]:
    """Pairs of non-identity support words; with ``closed`` the product must lie in the support too."""
    S = [w for w in dict.fromkeys(support) if w]
    members = set(S) | {EMPTY}
    pairs = []
    for g in S:
        for h in S:
            if not closed or wmul(g, h) in members:
                pairs.append((g, h))
    return pairs


# ---------------------------------------------------------------- LP


@dataclass
class FillResult:
    feasible: bool
    value: Optional[Fraction] = None
    chain: Chain2 = field(default_factory=dict)
    n_pairs: int = 0

    def __bool__(self):
        return self.feasible


def fill_ub_lp(target: Chain1, support: Iterable[Word], closed: bool = True) -> FillResult:
    """Least ``|b|_1`` over 2-chains on the support pairs with ``boundary2(b) == target``."""
    target = {w: Fraction(v) for w, v in target.items() if w and v}
    pairs = bar_pairs(support, closed)
    rows_of: dict[Word, dict[int, Fraction]] = defaultdict(dict)
    for k, (g, h) in enumerate(pairs):
        for w, v in pair_boundary(g, h).items():
            rows_of[w][2 * k] = v
            rows_of[w][2 * k + 1] = -v
    for w in target:
        if w not in rows_of:
            return FillResult(False, n_pairs=len(pairs))
    words = list(rows_of)
    p = LPProblem(
        [1] * (2 * len(pairs)),
        [rows_of[w] for w in words],
        [target.get(w, 0) for w in words],
    )
    r = solve_min(p)
    if r.status != OPTIMAL:
        return FillResult(False, n_pairs=len(pairs))
    chain: Chain2 = {}
    for k, pair in enumerate(pairs):
        c = r.primal[2 * k] - r.primal[2 * k + 1]
        if c:
            chain[pair] = c
    return FillResult(True, r.value, chain, len(pairs))


def fill_power(r: Word, n: int, radius: int = 1, support=None) -> FillResult:
    rn = wpow(r, n)
    if support is None:
        support = default_support(rn, radius)
    return fill_ub_lp({rn: Fraction(1)}, support)


def sfill_estimate(r: Word, n_max: int, radius: int = 1) -> list[tuple[int, Optional[Fraction]]]:
    """``(n, fill_ub(r^n)/n)`` for ``n = 1..n_max``; ``None`` where the support was too small."""
    if not r:
        raise ValueError("r reduces to the identity")
    if any(abelianization({r: Fraction(1)})):
        raise ValueError("r is not in the commutator subgroup")
    out = []
    for n in range(1, n_max + 1):
        res = fill_power(r, n, radius)
        out.append((n, res.value / n if res else None))
    return out
