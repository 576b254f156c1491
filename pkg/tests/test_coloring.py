import random

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.classic import vizing_color
from densecolor.coloring import (
    EdgeColoring,
    equalize,
    format_coloring,
    kempe_component,
    kempe_swap,
    parity_check,
    parse_coloring,
    validate_proper,
)
from densecolor.graph import eid

from .conftest import complete_graph, cycle_graph, random_graph


def test_assign_and_missing_bookkeeping():
    col = EdgeColoring(4, 3)
    col.assign(eid(0, 1), 1)
    col.assign(eid(2, 3), 1)
    col.assign(eid(0, 2), 2)
    assert col.has(0, 1) and col.has(0, 2)
    assert not col.has(0, 3)
    assert col.missing(0) == [3]
    assert col.missing_common(1, 3) == [2, 3]
    assert col.class_sizes() == {1: 2, 2: 1, 3: 0}
    col.unassign(eid(0, 1))
    assert col.missing(0) == [1, 3]
    assert col.colored_count() == 2


def test_assign_rejects_conflicts():
    col = EdgeColoring(4, 2)
    col.assign(eid(0, 1), 1)
    with pytest.raises(ValueError):
        col.assign(eid(1, 2), 1)
    with pytest.raises(ValueError):
        col.assign(eid(0, 1), 2)  # already colored


def test_validate_proper_flags_phantom_edge():
    g = cycle_graph(4)
    col = EdgeColoring(4, 2)
    col.assign(eid(0, 2), 1)  # not an edge of C4
    ok, where = validate_proper(g, col)
    assert not ok and where is not None


def test_kempe_component_is_a_path_on_open_chain():
    # path 0-1-2-3 colored 1,2,1: the (1,2)-chain from 0 is the whole path
    col = EdgeColoring(4, 2)
    col.assign(eid(0, 1), 1)
    col.assign(eid(1, 2), 2)
    col.assign(eid(2, 3), 1)
    comp = kempe_component(col, 0, 1, 2)
    assert sorted(comp) == sorted([eid(0, 1), eid(1, 2), eid(2, 3)])


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_kempe_swap_preserves_properness(seed):
    rng = random.Random(seed)
    g = random_graph(8, 0.6, seed)
    if g.edge_count() == 0:
        return
    col = vizing_color(g)
    if col.k < 2:
        return
    i, j = rng.sample(range(1, col.k + 1), 2)
    start = rng.randrange(8)
    kempe_swap(col, start, i, j)
    ok, _ = validate_proper(g, col)
    assert ok
    assert col.colored_count() == g.edge_count()


def test_equalize_balances_k4_coloring():
    g = complete_graph(4)
    col = vizing_color(g)
    equalize(col)
    sizes = col.class_sizes()
    vals = [sizes.get(c, 0) for c in range(1, col.k + 1)]
    assert max(vals) - min(vals) <= 1
    ok, _ = validate_proper(g, col)
    assert ok


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_equalize_random(seed):
    g = random_graph(9, 0.55, seed)
    if g.edge_count() < 2:
        return
    col = vizing_color(g)
    equalize(col)
    sizes = [col.class_sizes().get(c, 0) for c in range(1, col.k + 1)]
    assert max(sizes) - min(sizes) <= 1
    ok, _ = validate_proper(g, col)
    assert ok


def test_parity_check_on_complete_graph():
    g = complete_graph(6)
    col = vizing_color(g)
    assert parity_check(g, col)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_parity_check_random_colorings(seed):
    g = random_graph(9, 0.5, seed)
    col = vizing_color(g)
    assert parity_check(g, col)


def test_format_parse_round_trip():
    g = complete_graph(5)
    col = vizing_color(g)
    back = parse_coloring(format_coloring(col), 5)
    assert back.k == col.k
    assert sorted(back.items()) == sorted(col.items())
