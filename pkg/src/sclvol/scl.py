"""scl on the Euler extension and on ``Z^2 x T`` through the rotation quasimorphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .extensions import EPrimeElem, TTildeElem, project_kappa
from .plcircle import builder_t_n
from .rotation import DEFAULT_QMAX, RotResult, rot, rot_exact


class OutsideCertifiedSlice(ValueError):
    """Raised for ``((i, j), t)`` with ``j != 0``, where no scl value is certified."""


@dataclass(frozen=True)
class SclCertificate:
    element: EPrimeElem
    scl_value: Fraction
    rot_value: Fraction
    route: tuple[str, ...] = field(default=())
    rotation: RotResult | None = None

    def to_json(self) -> dict:
        return {
            "element": self.element.to_json(),
            "scl": str(self.scl_value),
            "rot": str(self.rot_value),
            "route": list(self.route),
            "witness": None if self.rotation is None else {
                "period": self.rotation.period,
                "shift": self.rotation.shift,
                "point": str(self.rotation.witness),
            },
        }


def scl_ttilde(x: TTildeElem, q_max: int = DEFAULT_QMAX) -> Fraction:
    # value of the bound |rot|/2 from the extremal quasimorphism; the
    # equality with scl holds wherever scl is defined
    return abs(rot(x, q_max)) / 2


def scl_eprime(x: EPrimeElem, q_max: int = DEFAULT_QMAX) -> Fraction:
    if x.z2 != 0:
        raise OutsideCertifiedSlice("scl is only certified on elements ((i, 0), t)")
    return scl_ttilde(project_kappa(x), q_max)


def element_with_scl(q) -> SclCertificate:
    """An element ``((i, 0), t_n^k)`` of scl exactly ``q``, with ``n`` the denominator of ``2q``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("q must be non-negative")
    target = 2 * q
    n, p = target.denominator, target.numerator
    # (0, t_n) has rotation 1/n; for n = 1 the generator is the central (1, id)
    gen = TTildeElem(1, builder_t_n(1)) if n == 1 else TTildeElem(0, builder_t_n(n))
    base = gen ** p
    elem = EPrimeElem(base.z, 0, base.t)
    q_max = max(DEFAULT_QMAX, n)
    value = scl_eprime(elem, q_max)
    if value != q:
        raise AssertionError(f"realized scl {value} != {q}")
    route = (
        f"rot of the generator = 1/{n}: periodic orbit of size {n}",
        f"rot is homogeneous, so rot(generator^{p}) = {target}",
        f"scl on the Euler extension is |rot|/2 = {q}",
        "dropping the second central coordinate preserves scl on ((i, 0), t)",
    )
    return SclCertificate(elem, value, target, route, rot_exact(base, q_max))


def scl_free_product(s1, s2) -> Fraction:
    s1, s2 = Fraction(s1), Fraction(s2)
    if s1 < 0 or s2 < 0:
        raise ValueError("scl values are non-negative")
    return s1 + s2 + Fraction(1, 2)


def scl_hnn_relator(s12) -> Fraction:
    s12 = Fraction(s12)
    if s12 < 0:
        raise ValueError("scl values are non-negative")
    return s12 + Fraction(1, 2)
