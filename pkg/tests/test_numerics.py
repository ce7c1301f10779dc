from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sclvol.numerics import (
    Dyadic, dyadic_to_rat, format_dyadic, format_rat, log2_exact, parse_dyadic, parse_rat,
    rat_cmp, rat_reduce,
)

rats = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)


@pytest.mark.parametrize("num,den,expected", [
    (2, 4, Fraction(1, 2)),
    (0, 7, Fraction(0)),
    (3, -6, Fraction(-1, 2)),
])
def test_rat_reduce(num, den, expected):
    r = rat_reduce(num, den)
    assert r == expected
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)
    assert r.denominator > 0


def test_rat_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_reduce(1, 0)


@pytest.mark.parametrize("d,expected", [
    (Dyadic(1, 1), Fraction(1, 2)),
    (Dyadic(3, 2), Fraction(3, 4)),
    (Dyadic(0, 0), Fraction(0)),
])
def test_dyadic_to_rat(d, expected):
    assert dyadic_to_rat(d) == expected


@pytest.mark.parametrize("a,b,expected", [
    (Fraction(1, 3), Fraction(1, 2), -1),
    (Fraction(2, 4), Fraction(1, 2), 0),
    (Fraction(-1, 2), Fraction(-1, 3), -1),
])
def test_rat_cmp(a, b, expected):
    assert rat_cmp(a, b) == expected


def test_dyadic_canonical_form():
    d = Dyadic(12, 4)
    assert (d.num, d.exp) == (3, 2)
    assert Dyadic(0, 5) == Dyadic(0, 0)
    with pytest.raises(ValueError):
        Dyadic(1, -1)


@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@given(rats, rats)
def test_rat_cmp_matches_order(a, b):
    assert rat_cmp(a, b) == (a > b) - (a < b)
    assert rat_cmp(a, b) == -rat_cmp(b, a)


dyads = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(0, 20))


@given(dyads, dyads, st.integers(-10, 10))
def test_dyadic_closure(x, y, k):
    assert (x + y).to_rat() == x.to_rat() + y.to_rat()
    assert (x * y).to_rat() == x.to_rat() * y.to_rat()
    assert (x - y).to_rat() == x.to_rat() - y.to_rat()
    assert x.shift(k).to_rat() == x.to_rat() * Fraction(2) ** k
    for z in (x + y, x * y, x.shift(k)):
        assert z.num % 2 == 1 or z.exp == 0


@given(dyads)
def test_dyadic_round_trip(x):
    assert Dyadic.from_rat(x.to_rat()) == x


def test_from_rat_rejects_non_dyadic():
    with pytest.raises(ValueError):
        Dyadic.from_rat(Fraction(1, 3))


def test_text_formats():
    assert parse_rat("3/6") == Fraction(1, 2)
    assert parse_rat("-7") == -7
    assert parse_rat("3/2^3") == Fraction(3, 8)
    assert format_rat(Fraction(2, 4)) == "1/2"
    assert format_rat(Fraction(6, 3)) == "2"
    assert format_dyadic(Fraction(3, 8)) == "3/2^3"
    assert parse_dyadic(format_dyadic(Fraction(5, 64))) == Fraction(5, 64)
    with pytest.raises(ValueError):
        parse_dyadic("1/3")
    with pytest.raises(ValueError):
        parse_rat("x/2")


def test_log2_exact():
    assert log2_exact(Fraction(1, 8)) == -3
    assert log2_exact(Fraction(4)) == 2
    with pytest.raises(ValueError):
        log2_exact(Fraction(3, 4))
