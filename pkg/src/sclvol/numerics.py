"""Exact rational and dyadic arithmetic.

Rationals are :class:`fractions.Fraction`, which already keeps a reduced
form with positive denominator.  Dyadic rationals ``num / 2**exp`` get a
small canonical wrapper so that breakpoints can be validated and printed
in ``p/2^k`` form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

__all__ = [
    "Rat",
    "Dyadic",
    "rat_reduce",
    "dyadic_to_rat",
    "rat_cmp",
    "parse_rat",
    "format_rat",
    "parse_dyadic",
    "format_dyadic",
    "is_dyadic",
    "log2_exact",
]


def rat_reduce(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Three-way comparison by cross multiplication: -1, 0 or 1."""
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def is_dyadic(x: Fraction) -> bool:
    d = Fraction(x).denominator
    return d & (d - 1) == 0


def log2_exact(x: Fraction) -> int:
    """Integer ``k`` with ``x == 2**k``; raises if ``x`` is not a power of two."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    if n <= 0 or n & (n - 1) or d & (d - 1):
        raise ValueError(f"{x} is not a power of 2")
    return n.bit_length() - d.bit_length()


@dataclass(frozen=True, order=False)
class Dyadic:
    """The number ``num / 2**exp`` in canonical form (``num`` odd or ``exp == 0``)."""

    num: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be non-negative")
        num, exp = self.num, self.exp
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_rat(cls, x: Fraction) -> Dyadic:
        x = Fraction(x)
        if not is_dyadic(x):
            raise ValueError(f"{x} is not dyadic")
        return cls(x.numerator, x.denominator.bit_length() - 1)

    def to_rat(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __add__(self, other: Dyadic) -> Dyadic:
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other: Dyadic) -> Dyadic:
        return self + (-other)

    def __mul__(self, other: Dyadic) -> Dyadic:
        return Dyadic(self.num * other.num, self.exp + other.exp)

    def shift(self, k: int) -> Dyadic:
        """Multiply by ``2**k``."""
        if k >= 0:
            return Dyadic(self.num << (k - self.exp), 0) if k >= self.exp else Dyadic(self.num, self.exp - k)
        return Dyadic(self.num, self.exp - k)

    def __str__(self) -> str:
        return format_dyadic(self.to_rat())


def dyadic_to_rat(d: Dyadic) -> Fraction:
    return d.to_rat()


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DYADIC_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*2\s*\^\s*(\d+)\s*$")


def parse_rat(s: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ``"p/2^k"`` is accepted as well."""
    m = _DYADIC_RE.match(s)
    if m:
        return Fraction(int(m.group(1)), 1 << int(m.group(2)))
    m = _RAT_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse rational {s!r}")
    return rat_reduce(int(m.group(1)), int(m.group(2) or 1))


def format_rat(x: Fraction) -> str:
    return str(Fraction(x))


def parse_dyadic(s: str) -> Fraction:
    x = parse_rat(s)
    if not is_dyadic(x):
        raise ValueError(f"{s!r} is not dyadic")
    return x


def format_dyadic(x: Fraction) -> str:
    x = Fraction(x)
    if not is_dyadic(x):
        raise ValueError(f"{x} is not dyadic")
    return f"{x.numerator}/2^{x.denominator.bit_length() - 1}"
