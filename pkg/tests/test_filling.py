import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sclvol.filling import (
    abelianization, bar_pairs, boundary2, boundary3, commutator, default_support,
    factor_support, fill_power, fill_ub_lp, format_word, l1_norm, pair_boundary, parse_word,
    reduce_word, sfill_estimate, support_ball, winv, wmul, wpow, word_rank,
)

A, B = (1,), (2,)
R = parse_word("[a,b]")

letters = st.sampled_from([1, -1, 2, -2, 3, -3])
words = st.lists(letters, max_size=6).map(reduce_word)
nonempty = words.filter(bool)


def test_word_syntax():
    assert R == (1, 2, -1, -2)
    assert format_word(R) == "abAB"
    assert parse_word("aA") == ()
    assert parse_word("[ab,c]") == commutator((1, 2), (3,))
    assert word_rank(parse_word("[a,c]")) == 3
    assert format_word(()) == "1"
    with pytest.raises(ValueError):
        parse_word("[a,b")
    with pytest.raises(ValueError):
        parse_word("a1")


@given(words, words, words)
def test_free_group_laws(u, v, w):
    assert wmul(wmul(u, v), w) == wmul(u, wmul(v, w))
    assert wmul(u, winv(u)) == ()
    assert reduce_word(u + v) == wmul(u, v)


def test_boundary_examples():
    assert boundary2({(A, B): 1}) == {A: 1, B: 1, (1, 2): -1}
    assert boundary2({(A, winv(A)): 1}) == {A: 1, (-1,): 1}
    assert boundary2({}) == {}
    assert pair_boundary((), A) == {}


@given(st.dictionaries(st.tuples(nonempty, nonempty, nonempty), st.integers(-3, 3), max_size=5))
def test_boundary_squared_is_zero(t):
    assert boundary2(boundary3(t)) == {}


@given(st.dictionaries(st.tuples(nonempty, nonempty), st.integers(-3, 3), max_size=6))
def test_boundaries_vanish_in_h1(b):
    assert not any(abelianization(boundary2(b), 3))


def test_support_ball_sizes():
    assert support_ball([1, 2], 0) == [()]
    assert len(support_ball([1, 2], 1)) == 5
    assert len(support_ball([1, 2], 2)) == 17
    assert len(set(support_ball([1, 2], 3))) == 1 + 4 + 12 + 36
    with pytest.raises(ValueError):
        support_ball([1], -1)


def test_factor_support():
    fs = factor_support(R)
    assert R in fs and winv(R) in fs and () in fs
    assert set(default_support(R, 1)) >= set(support_ball([1, 2], 1))


def test_single_pair_fills_its_boundary():
    target = pair_boundary(A, B)
    res = fill_ub_lp(target, [(), A, B, (1, 2)])
    assert res and res.value <= 1


def test_generator_is_never_filled():
    for radius in (1, 2):
        res = fill_ub_lp({A: 1}, support_ball([1, 2], radius), closed=False)
        assert not res


def test_commutator_regression():
    ball = fill_ub_lp({R: 1}, support_ball([1, 2], 2), closed=False)
    assert ball.value == 3
    res = fill_power(R, 1)
    assert res.value == 3
    assert boundary2(res.chain) == {R: 1}
    assert l1_norm(res.chain) == res.value


def test_monotone_in_support():
    small = default_support(R, 0)
    big = default_support(R, 1)
    v_small = fill_ub_lp({R: 1}, small).value
    v_big = fill_ub_lp({R: 1}, big).value
    assert v_big <= v_small


def test_subadditivity():
    f1 = fill_power(R, 1).value
    f2 = fill_power(R, 2).value
    assert f2 <= 2 * f1 + 1
    # the witness: two fillings of r plus the bar pair (r, r)
    chain = {k: 2 * v for k, v in fill_power(R, 1).chain.items()}
    chain[(R, R)] = chain.get((R, R), 0) - 1
    assert boundary2(chain) == {wpow(R, 2): 1}


def test_sfill_estimate():
    est = sfill_estimate(R, 2)
    assert [n for n, _ in est] == [1, 2]
    for n, v in est:
        assert v >= Fr(2 * n - 1, n)
    with pytest.raises(ValueError):
        sfill_estimate(parse_word("aA"), 2)
    with pytest.raises(ValueError):
        sfill_estimate(parse_word("ab"), 2)


def test_against_scipy():
    np = pytest.importorskip("numpy")
    linprog = pytest.importorskip("scipy.optimize").linprog
    rng = random.Random(4)
    for _ in range(5):
        target_word = wpow(R, rng.randint(1, 2)) if rng.random() < 0.5 else commutator(
            reduce_word([rng.choice([1, -1, 2, -2]) for _ in range(2)]), B)
        if not target_word:
            continue
        support = default_support(target_word, 1)
        pairs = bar_pairs(support)
        words = sorted({w for g, h in pairs for w in pair_boundary(g, h)})
        index = {w: i for i, w in enumerate(words)}
        M = np.zeros((len(words), len(pairs)))
        for k, (g, h) in enumerate(pairs):
            for w, v in pair_boundary(g, h).items():
                M[index[w], k] = float(v)
        rhs = np.zeros(len(words))
        if target_word not in index:
            continue
        rhs[index[target_word]] = 1
        ref = linprog(np.ones(2 * len(pairs)), A_eq=np.hstack([M, -M]), b_eq=rhs,
                      bounds=(0, None), method="highs")
        ours = fill_ub_lp({target_word: 1}, support)
        assert ref.success == bool(ours)
        if ours:
            assert abs(ref.fun - float(ours.value)) < 1e-9
