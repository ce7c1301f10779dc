"""Construction plans: chains of norm identities from an scl value to an l1-norm or a volume.

Manifold-level steps (doubling, Thom realization, products with hyperbolic
manifolds) are symbolic; only their norm arithmetic is computed, and every
plan can re-derive that arithmetic from scratch with :meth:`ConstructionPlan.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .extensions import EPrimeElem, project_kappa
from .numerics import format_rat
from .rotation import RotResult, verify_witness
from .scl import element_with_scl

# named identities a plan step may cite
IDENTITIES = {
    "rot-realization": "rot of the lift (0, t_n) is 1/n; powers realize every rational",
    "scl-rot": "scl(x) = |rot(x)|/2 on the Euler extension of T",
    "scl-slice": "scl of ((i, 0), t) in the doubled-cocycle extension equals scl of (i, t)",
    "doubling": "||alpha||_1 = 8 * scl_G(r) for the canonical class of D(G, r)",
    "zero-class": "the zero class of the trivial group has l1-norm 0",
    "surface-norm": "||Sigma_g|| = 4 * (g - 1)",
    "product-surface": "||alpha x [Sigma_g]||_1 = 6 * (g - 1) * ||alpha||_1 for a degree-2 class alpha",
    "product-bounds": "||a||_1 ||b||_1 <= ||a x b||_1 <= binom(m + n, m) ||a||_1 ||b||_1",
    "degree-2-product": "||a x b||_1 <= 3/2 ||a||_1 ||b||_1 for degree-2 classes",
    "surface-product": "||Sigma_g x Sigma_h|| = 3/2 ||Sigma_g|| ||Sigma_h|| = 24 (g - 1)(h - 1)",
    "thom": "||M|| = m * ||alpha||_1 with 1 <= m <= K_d; K_4 = K_5 = 1",
    "sphere": "||S^d|| = 0",
}

THOM_CONSTANTS = {4: 1, 5: 1}


@dataclass(frozen=True)
class SymbolicBound:
    """``coeff * prod(symbols)``, e.g. ``6/100 * ||N_4||``."""

    coeff: Fraction
    symbols: tuple[str, ...] = ()

    def __str__(self) -> str:
        return " * ".join([format_rat(self.coeff), *self.symbols])


@dataclass
class PlanStep:
    step: str
    cite: str
    inputs: dict
    output: object

    def __post_init__(self):
        if self.cite not in IDENTITIES:
            raise ValueError(f"unknown identity {self.cite!r}")

    @property
    def quote(self) -> str:
        return IDENTITIES[self.cite]

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "cite": self.cite,
            "quote": self.quote,
            "inputs": {k: _jsonable(v) for k, v in self.inputs.items()},
            "output": _jsonable(self.output),
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rat(v)
    if isinstance(v, SymbolicBound):
        return str(v)
    if isinstance(v, EPrimeElem):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class ConstructionPlan:
    kind: str  # l1_norm | simplicial_volume | bound_interval
    target: Fraction
    steps: list[PlanStep] = field(default_factory=list)
    final: object = None
    element: Optional[EPrimeElem] = None
    rotation: Optional[RotResult] = None
    params: dict = field(default_factory=dict)

    def add(self, step: str, cite: str, output, **inputs) -> object:
        self.steps.append(PlanStep(step, cite, inputs, output))
        return output

    def verify(self) -> bool:
        """Recompute the numeric chain independently of the recorded step outputs."""
        return _VERIFIERS[self.params["route"]](self)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "target": format_rat(self.target),
            "steps": [s.to_json() for s in self.steps],
            "final": {"kind": self.kind, "value": _jsonable(self.final)},
            "verified": self.verify(),
        }

    def to_text(self) -> str:
        lines = [f"plan for {self.kind} = {format_rat(self.target)}"]
        for i, s in enumerate(self.steps, 1):
            ins = ", ".join(f"{k}={_short(v)}" for k, v in s.inputs.items())
            lines.append(f"  {i}. {s.step}({ins}) -> {_short(s.output)}    [{s.cite}: {s.quote}]")
        lines.append(f"  final {self.kind}: {_short(self.final)}")
        lines.append(f"  verified: {self.verify()}")
        return "\n".join(lines)


def _short(v) -> str:
    if isinstance(v, Fraction):
        return format_rat(v)
    if isinstance(v, EPrimeElem):
        return f"(({v.z1}, {v.z2}), t with {len(v.t.breakpoints)} breakpoints)"
    if isinstance(v, tuple):
        return "(" + ", ".join(_short(x) for x in v) + ")"
    return str(v)


def _check_q(q) -> Fraction:
    q = Fraction(q)
    if q < 0:
        raise ValueError("q must be non-negative")
    return q


def plan_class_norm(q) -> ConstructionPlan:
    """Integral 2-class of l1-norm exactly ``q``."""
    q = _check_q(q)
    plan = ConstructionPlan("l1_norm", q, params={"route": "class", "q": q})
    if q == 0:
        plan.final = plan.add("zero_class", "zero-class", Fraction(0))
        return plan
    scl_target = q / 8
    cert = element_with_scl(scl_target)
    plan.element, plan.rotation = cert.element, cert.rotation
    plan.add("realize_rotation", "rot-realization", cert.rot_value, scl_target=scl_target)
    plan.add("scl_from_rot", "scl-rot", abs(cert.rot_value) / 2, rot=cert.rot_value)
    s = plan.add("lift_to_extension", "scl-slice", cert.scl_value, element=cert.element)
    plan.final = plan.add("double", "doubling", 8 * s, scl=s)
    return plan


def _certified_scl(plan: ConstructionPlan) -> Optional[Fraction]:
    """scl of the plan element from its rotation witness, re-checked by iterating the lift."""
    x, r = plan.element, plan.rotation
    if x is None or r is None or x.z2 != 0 or not verify_witness(project_kappa(x), r):
        return None
    return abs(Fraction(r.shift, r.period)) / 2


def _verify_class(plan: ConstructionPlan) -> bool:
    q = plan.params["q"]
    if q == 0:
        return plan.final == 0
    s = _certified_scl(plan)
    return s is not None and 8 * s == q == plan.final


def plan_manifold_dim4(q, genus: int = 2) -> ConstructionPlan:
    """Closed oriented 4-manifold of simplicial volume exactly ``q``."""
    q = _check_q(q)
    if genus < 2:
        raise ValueError("the surface factor needs genus >= 2")
    plan = ConstructionPlan("simplicial_volume", q,
                            params={"route": "dim4", "q": q, "genus": genus})
    if q == 0:
        plan.final = plan.add("sphere", "sphere", Fraction(0), dim=4)
        return plan
    factor = 6 * (genus - 1)
    class_norm = q / factor
    sub = plan_class_norm(class_norm)
    plan.element, plan.rotation = sub.element, sub.rotation
    plan.steps.extend(sub.steps)
    surf = plan.add("surface_norm", "surface-norm", Fraction(4 * (genus - 1)), genus=genus)
    prod = plan.add("product_with_surface", "product-surface",
                    Fraction(3, 2) * class_norm * surf, class_norm=class_norm, genus=genus)
    m = THOM_CONSTANTS[4]
    plan.final = plan.add("thom_realization", "thom", m * prod, dim=4, multiplier=m, class_norm=prod)
    if q == surface_product_volume(2, 2):
        plan.add("cross_check", "surface-product", surface_product_volume(2, 2), g=2, h=2)
    return plan


def _verify_dim4(plan: ConstructionPlan) -> bool:
    q, genus = plan.params["q"], plan.params["genus"]
    if q == 0:
        return plan.final == 0
    s = _certified_scl(plan)
    if s is None:
        return False
    alpha = 8 * s
    volume = THOM_CONSTANTS[4] * Fraction(3, 2) * alpha * 4 * (genus - 1)
    return volume == q == plan.final


def surface_product_volume(g: int, h: int) -> Fraction:
    if g < 1 or h < 1:
        raise ValueError("genus must be at least 1")
    return Fraction(24 * (g - 1) * (h - 1))


def product_norm_bounds(n1, n2, deg1: int, deg2: int) -> tuple[Fraction, Fraction]:
    n1, n2 = Fraction(n1), Fraction(n2)
    if n1 < 0 or n2 < 0 or deg1 < 0 or deg2 < 0:
        raise ValueError("norms and degrees must be non-negative")
    lower = n1 * n2
    if deg1 == 2 and deg2 == 2:
        return lower, Fraction(3, 2) * lower
    return lower, comb(deg1 + deg2, deg1) * lower


def plan_nogap(d: int, eps) -> ConstructionPlan:
    """d-manifold with ``0 < ||M|| <= binom(d, 2) K_d ||N_d|| eps``; ``N_d`` hyperbolic of dimension d-2."""
    if d < 4:
        raise ValueError("dimensions below 4 have a gap; need d >= 4")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    plan = ConstructionPlan("bound_interval", eps, params={"route": "nogap", "d": d, "eps": eps})
    sub = plan_class_norm(eps)
    plan.element, plan.rotation = sub.element, sub.rotation
    plan.steps.extend(sub.steps)
    nd = f"||N_{d}||"
    binom = comb(d, 2)
    lo, hi = SymbolicBound(eps, (nd,)), SymbolicBound(binom * eps, (nd,))
    plan.add("product_with_hyperbolic", "product-bounds", (lo, hi),
             class_norm=eps, degrees=(2, d - 2), binomial=binom)
    if d in THOM_CONSTANTS:
        upper = SymbolicBound(binom * THOM_CONSTANTS[d] * eps, (nd,))
    else:
        upper = SymbolicBound(binom * eps, (f"K_{d}", nd))
    plan.final = plan.add("thom_realization", "thom", ("0", upper), dim=d,
                          K=THOM_CONSTANTS.get(d, f"K_{d}"))
    plan.params.update(binomial=binom, upper=upper)
    if d == 4:
        exact = plan_manifold_dim4(6 * eps)
        plan.add("exact_via_genus_2", "product-surface", exact.final, class_norm=eps, genus=2)
    return plan


def _verify_nogap(plan: ConstructionPlan) -> bool:
    d, eps = plan.params["d"], plan.params["eps"]
    s = _certified_scl(plan)
    if s is None or 8 * s != eps:
        return False
    upper = plan.params["upper"]
    return upper.coeff == comb(d, 2) * THOM_CONSTANTS.get(d, 1) * eps


_VERIFIERS = {"class": _verify_class, "dim4": _verify_dim4, "nogap": _verify_nogap}
