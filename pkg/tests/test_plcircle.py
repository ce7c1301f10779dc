from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dyadics, t_elements
from sclvol.plcircle import (
    PLMap, builder_a, builder_b, builder_t_n, canonical_lift, compose, evaluate,
    left_slope_log2, pow2, right_slope_log2,
)

ID = PLMap.identity()


def test_compose_examples():
    a, b, t2 = builder_a(), builder_b(), builder_t_n(2)
    assert compose(ID, a) == a
    assert compose(a, b) == compose(b, a)
    assert compose(t2, t2) == ID


@pytest.mark.parametrize("f,x,y", [
    (ID, Fr(1, 4), Fr(1, 4)),
    (builder_t_n(2), 0, Fr(1, 2)),
    (builder_t_n(3), Fr(1, 2), Fr(3, 4)),
    (builder_a(), Fr(1, 4), Fr(1, 4)),
])
def test_evaluate_examples(f, x, y):
    assert evaluate(f, x) == y


@pytest.mark.parametrize("x", [Fr(1), Fr(-1, 4), Fr(3, 2)])
def test_evaluate_outside_domain(x):
    with pytest.raises(ValueError):
        evaluate(ID, x)


def test_slopes():
    assert right_slope_log2(ID, Fr(3, 8)) == 0
    assert right_slope_log2(builder_t_n(3), 0) == -1
    assert right_slope_log2(builder_t_n(2), Fr(1, 2)) == 0
    assert right_slope_log2(builder_a(), Fr(1, 2)) == 1
    assert left_slope_log2(builder_a(), Fr(1, 2)) == 0
    # the left side of 0 is read from 1-
    assert left_slope_log2(builder_t_n(3), 0) == 1


def test_builder_t_n_shapes():
    assert builder_t_n(1) == ID
    assert builder_t_n(2) == PLMap.rotation(Fr(1, 2))
    t4 = builder_t_n(4)
    # 1/2 is not a genuine breakpoint: both neighbouring pieces have slope 1/2
    assert t4.breakpoints == (0, Fr(3, 4), Fr(7, 8))
    assert [right_slope_log2(t4, x) for x in (0, Fr(1, 2), Fr(3, 4), Fr(7, 8))] == [-1, -1, 0, 2]


@pytest.mark.parametrize("n", range(1, 13))
def test_builder_t_n_orbit(n):
    t = builder_t_n(n)
    orbit = [1 - pow2(-k) for k in range(n)]
    for k in range(n):
        assert t(orbit[k]) == orbit[(k + 1) % n]
    assert t ** n == ID


def test_builders_supports():
    a, b = builder_a(), builder_b()
    for k in range(64):
        x = Fr(k, 64)
        if x <= Fr(1, 2):
            assert a(x) == x
        if x >= Fr(1, 2):
            assert b(x) == x


def test_canonical_lift():
    assert canonical_lift(ID)(0) == 0
    t2 = builder_t_n(2)
    assert canonical_lift(t2)(0) == Fr(1, 2)
    assert canonical_lift(t2.inverse)(0) == Fr(1, 2)
    s = canonical_lift(builder_t_n(3))
    assert s(Fr(1)) == s(Fr(0)) + 1
    assert s(Fr(-1, 2)) == s(Fr(1, 2)) - 1


def test_from_pieces_rejects_invalid():
    with pytest.raises(ValueError):
        PLMap.from_pieces([(0, 0, 0), (Fr(1, 2), Fr(1, 2), 1)])  # total length != 1
    with pytest.raises(ValueError):
        PLMap.rotation(Fr(1, 3))


def test_record_round_trip():
    for f in (ID, builder_a(), builder_t_n(5), builder_t_n(2)):
        assert PLMap.from_records(f.to_records()) == f
    rec = builder_t_n(3).to_records()
    assert set(rec[0]) == {"breakpoint", "image", "slope_log2"}


@given(t_elements)
def test_inverse(f):
    assert compose(f, f.inverse) == ID
    assert compose(f.inverse, f) == ID


@given(t_elements)
def test_image_lengths_sum_to_one(f):
    pieces = f.pieces()
    assert sum((r - l) * pow2(s) for l, r, s in pieces) == 1
    assert all(p.denominator & (p.denominator - 1) == 0 for p in f.breakpoints)


@given(t_elements, t_elements, dyadics)
def test_compose_pointwise(f, g, x):
    assert evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x))


@given(t_elements, t_elements, t_elements)
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(t_elements, st.integers(-4, 4), st.integers(-4, 4))
def test_powers_add(f, m, n):
    assert compose(f ** m, f ** n) == f ** (m + n)


@given(t_elements, dyadics)
def test_lift_is_equivariant_and_monotone(f, x):
    s = canonical_lift(f)
    assert 0 <= s(0) < 1
    assert s(x + 1) == s(x) + 1
    assert s(x) % 1 == f(x)
    assert s(x + Fr(1, 1 << 14)) > s(x)
