import math

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.generate import (
    FAMILIES,
    gen_planted_overfull,
    gen_random_dense,
    gen_regular,
    gen_two_light,
    gen_wide_spread,
    realize_degree_sequence,
)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=2, max_size=10))
def test_realize_degree_sequence(targets):
    n = len(targets)
    d = sorted(targets, reverse=True)
    graphical = sum(d) % 2 == 0 and all(
        sum(d[:k]) <= k * (k - 1) + sum(min(x, k) for x in d[k:])
        for k in range(1, n + 1)
    )
    try:
        g = realize_degree_sequence(targets)
    except ValueError:
        assert not graphical
        return
    assert graphical
    for v, d in enumerate(targets):
        assert g.degree(v) == d


def test_gen_regular_shape():
    g = gen_regular(20, 13, seed=7)
    assert all(g.degree(v) == 13 for v in range(20))
    with pytest.raises(ValueError):
        gen_regular(10, 10, seed=0)  # degree out of range
    with pytest.raises(ValueError):
        gen_regular(9, 4, seed=0)    # odd order


def test_gen_regular_seeds_differ():
    a = gen_regular(20, 13, seed=1)
    b = gen_regular(20, 13, seed=2)
    assert sorted(a.edges()) != sorted(b.edges())


def test_gen_two_light_shape():
    g = gen_two_light(40, 27, drop=2, seed=11)
    degs = sorted(g.degree(v) for v in range(40))
    assert degs[:2] == [25, 25]
    assert degs[2:] == [27] * 38


def test_gen_wide_spread_shape():
    g = gen_wide_spread(40, seed=2)
    n = 20
    thr = math.ceil(n ** (6.0 / 7.0))
    degs = [g.degree(v) for v in range(40)]
    assert max(degs) - min(degs) >= thr
    assert degs.count(min(degs)) >= thr
    assert degs.count(max(degs)) >= n + 1
    assert min(degs) > n


def test_gen_wide_spread_infeasible_when_tiny():
    with pytest.raises(ValueError):
        gen_wide_spread(20, seed=0)


def test_gen_random_dense_floor():
    g = gen_random_dense(20, p=0.6, seed=5)
    assert g.min_degree() >= math.ceil(1.2 * 10)


def test_gen_planted_overfull_shape():
    g = gen_planted_overfull(12, deficiency=2, seed=9)
    assert g.max_degree() == 10
    assert g.min_degree() == 8
    assert sum(1 for v in range(12) if g.degree(v) == 8) == 1
    with pytest.raises(ValueError):
        gen_planted_overfull(12, deficiency=3, seed=0)
    with pytest.raises(ValueError):
        gen_planted_overfull(8, deficiency=4, seed=0)


def test_families_registry():
    assert set(FAMILIES) == {
        "regular",
        "two-light",
        "wide-spread",
        "random-dense",
        "planted-overfull",
    }
