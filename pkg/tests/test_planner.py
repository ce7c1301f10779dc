import json
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sclvol.extensions import project_kappa
from sclvol.plcircle import builder_t_n
from sclvol.planner import (
    IDENTITIES, PlanStep, SymbolicBound, plan_class_norm, plan_manifold_dim4, plan_nogap,
    product_norm_bounds, surface_product_volume,
)
from sclvol.rotation import rot_exact
from sclvol.scl import scl_ttilde


def test_class_norm_examples():
    zero = plan_class_norm(0)
    assert zero.final == 0 and zero.steps[0].cite == "zero-class" and zero.verify()
    one = plan_class_norm(1)
    assert one.final == 1 and one.verify()
    assert one.element.t == builder_t_n(4) and one.steps[0].output == Fr(1, 4)
    four = plan_class_norm(4)
    assert four.steps[2].output == Fr(1, 2) and four.verify()
    with pytest.raises(ValueError):
        plan_class_norm(-1)


@pytest.mark.parametrize("q", [Fr(0), Fr(1), Fr(6), Fr(24), Fr(355, 113)])
def test_manifold_dim4(q):
    plan = plan_manifold_dim4(q)
    assert plan.final == q
    assert plan.verify()
    assert all(s.cite in IDENTITIES for s in plan.steps)


def test_manifold_dim4_details():
    plan = plan_manifold_dim4(1)
    assert plan.element.t == builder_t_n(24)
    assert plan.steps[0].inputs["scl_target"] == Fr(1, 48)
    assert any(s.cite == "surface-product" for s in plan_manifold_dim4(24).steps)
    assert plan_manifold_dim4(0).steps[0].cite == "sphere"


def test_tampered_plan_fails_verification():
    plan = plan_manifold_dim4(6)
    plan.final = Fr(7)
    assert not plan.verify()


def test_surface_products():
    assert surface_product_volume(1, 5) == 0
    assert surface_product_volume(2, 2) == 24
    assert surface_product_volume(3, 4) == 144
    with pytest.raises(ValueError):
        surface_product_volume(0, 2)


def test_product_bounds():
    assert product_norm_bounds(4, 4, 2, 2) == (16, 24)
    assert product_norm_bounds(1, 1, 2, 3) == (1, 10)
    assert product_norm_bounds(0, 7, 3, 5) == (0, 0)
    with pytest.raises(ValueError):
        product_norm_bounds(-1, 1, 2, 2)


@given(st.integers(1, 9), st.integers(1, 9))
def test_surface_product_matches_degree_two_bound(g, h):
    upper = product_norm_bounds(4 * (g - 1), 4 * (h - 1), 2, 2)[1]
    assert surface_product_volume(g, h) == upper


def test_nogap():
    p4 = plan_nogap(4, Fr(1, 100))
    zero, upper = p4.final
    assert zero == "0"
    assert upper == SymbolicBound(Fr(6, 100), ("||N_4||",))
    assert p4.params["binomial"] == 6 and p4.verify()
    assert p4.steps[-1].step == "exact_via_genus_2" and p4.steps[-1].output == Fr(6, 100)
    p5 = plan_nogap(5, 1)
    assert p5.final[1] == SymbolicBound(Fr(10), ("||N_5||",))
    p7 = plan_nogap(7, Fr(1, 2))
    assert p7.final[1].symbols == ("K_7", "||N_7||") and p7.final[1].coeff == Fr(21, 2)
    with pytest.raises(ValueError):
        plan_nogap(3, 1)
    with pytest.raises(ValueError):
        plan_nogap(4, 0)


@given(st.fractions(min_value=0, max_value=20, max_denominator=12))
def test_class_norm_recomputed_independently(q):
    plan = plan_class_norm(q)
    if q:
        assert plan.final == 8 * scl_ttilde(project_kappa(plan.element), q_max=200)
    assert plan.final == q


def test_plan_serialization():
    plan = plan_manifold_dim4(Fr(3, 2))
    data = plan.to_json()
    json.dumps(data)
    assert data["verified"] is True
    assert {"step", "cite", "quote", "inputs", "output"} <= set(data["steps"][0])
    assert data["final"] == {"kind": "simplicial_volume", "value": "3/2"}
    assert "verified: True" in plan.to_text()
    with pytest.raises(ValueError):
        PlanStep("x", "not-an-identity", {}, 0)
