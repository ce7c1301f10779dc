"""Central extensions of T: the Euler extension ``Z x T`` and ``Z^2 x T`` twisted by (Eu, gv).

The second integer coordinate of :class:`EPrimeElem` uses ``gv`` itself, so
the extension is by the classes ``(eu, 2 alpha)`` rather than ``(eu, alpha)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycles import euler_cocycle, gv
from .plcircle import PLMap, compose

_ID = PLMap.identity()


@dataclass(frozen=True)
class TTildeElem:
    z: int
    t: PLMap

    @classmethod
    def identity(cls) -> TTildeElem:
        return cls(0, _ID)

    def __mul__(self, other: TTildeElem) -> TTildeElem:
        if not isinstance(other, TTildeElem):
            raise TypeError(f"cannot multiply TTildeElem by {type(other).__name__}")
        return TTildeElem(self.z + other.z + euler_cocycle(self.t, other.t), compose(self.t, other.t))

    def inverse(self) -> TTildeElem:
        ti = self.t.inverse
        return TTildeElem(-self.z - euler_cocycle(self.t, ti), ti)

    def __pow__(self, n: int) -> TTildeElem:
        return _power(self, n)

    def to_json(self) -> dict:
        return {"z": [self.z], "t": self.t.to_records()}


@dataclass(frozen=True)
class EPrimeElem:
    z1: int
    z2: int
    t: PLMap

    @classmethod
    def identity(cls) -> EPrimeElem:
        return cls(0, 0, _ID)

    def __mul__(self, other: EPrimeElem) -> EPrimeElem:
        if not isinstance(other, EPrimeElem):
            raise TypeError(f"cannot multiply EPrimeElem by {type(other).__name__}")
        s, t = self.t, other.t
        return EPrimeElem(
            self.z1 + other.z1 + euler_cocycle(s, t),
            self.z2 + other.z2 + gv(s, t),
            compose(s, t),
        )

    def inverse(self) -> EPrimeElem:
        ti = self.t.inverse
        return EPrimeElem(-self.z1 - euler_cocycle(self.t, ti), -self.z2 - gv(self.t, ti), ti)

    def __pow__(self, n: int) -> EPrimeElem:
        return _power(self, n)

    def to_json(self) -> dict:
        return {"z": [self.z1, self.z2], "t": self.t.to_records()}


def _power(x, n: int):
    base = x if n >= 0 else x.inverse()
    result = type(x).identity()
    n = abs(n)
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def mul(x, y):
    if type(x) is not type(y):
        raise TypeError("elements of different extensions")
    return x * y


def inv(x):
    return x.inverse()


def power(x, n: int):
    return x ** n


def project_kappa(x: EPrimeElem) -> TTildeElem:
    """Forget the second central coordinate."""
    return TTildeElem(x.z1, x.t)


def elem_from_json(d: dict):
    t = PLMap.from_records(d["t"])
    z = list(d.get("z", [0]))
    if len(z) == 1:
        return TTildeElem(int(z[0]), t)
    if len(z) == 2:
        return EPrimeElem(int(z[0]), int(z[1]), t)
    raise ValueError("z must have one or two entries")
