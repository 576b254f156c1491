import random

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.classic import (
    dirac_hamiltonian_cycle,
    greedy_multigraph_color,
    hakimi_feasible,
    hakimi_realize,
    hamiltonian_path_between,
    hopcroft_karp,
    konig_color,
    path_system,
    pm_with_degree_condition,
    vizing_color,
)
from densecolor.coloring import validate_proper
from densecolor.errors import HypothesisError, PipelineFailure
from densecolor.graph import Multigraph, SimpleGraph

from .conftest import complete_graph, cycle_graph, petersen, random_graph


# -- matchings -----------------------------------------------------------


def test_hopcroft_karp_perfect_on_crown():
    left = [0, 1, 2]
    adj = {0: [10, 11], 1: [11, 12], 2: [10, 12]}
    match_l, rounds = hopcroft_karp(left, adj)
    assert len(match_l) == 3
    assert len(set(match_l.values())) == 3


def test_hopcroft_karp_respects_initial_partial():
    left = [0, 1]
    adj = {0: [10], 1: [10, 11]}
    match_l, _ = hopcroft_karp(left, adj, initial={1: 10})
    assert match_l == {0: 10, 1: 11}


def test_hopcroft_karp_max_but_not_perfect():
    left = [0, 1]
    adj = {0: [10], 1: [10]}
    match_l, _ = hopcroft_karp(left, adj)
    assert len(match_l) == 1


def _bipartite_with_pm(np, extra, seed):
    rng = random.Random(seed)
    h = SimpleGraph(2 * np)
    perm = list(range(np, 2 * np))
    rng.shuffle(perm)
    for x in range(np):
        h.add_edge(x, perm[x])
    for _ in range(extra):
        x, y = rng.randrange(np), np + rng.randrange(np)
        if not h.has_edge(x, y):
            h.add_edge(x, y)
    return h


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_pm_with_degree_condition_saturates(seed):
    rng = random.Random(seed)
    np = rng.randrange(2, 9)
    h = _bipartite_with_pm(np, rng.randrange(0, 3 * np), seed)
    pairs = pm_with_degree_condition(h, range(np), range(np, 2 * np), t=2)
    assert len(pairs) == np
    assert len({x for x, _ in pairs}) == np
    assert len({y for _, y in pairs}) == np
    for x, y in pairs:
        assert h.has_edge(x, y)


def test_pm_with_degree_condition_failure_named():
    h = SimpleGraph(4)
    h.add_edge(0, 2)
    h.add_edge(1, 2)  # vertex 3 isolated: no perfect matching
    with pytest.raises(PipelineFailure) as ei:
        pm_with_degree_condition(h, [0, 1], [2, 3], t=0)
    assert ei.value.step == "pm_with_degree_condition"


# -- edge colorings ------------------------------------------------------


def test_vizing_uses_at_most_delta_plus_one():
    for g in (complete_graph(5), complete_graph(6), petersen(), cycle_graph(7)):
        col = vizing_color(g)
        ok, _ = validate_proper(g, col)
        assert ok
        assert col.colored_count() == g.edge_count()
        assert col.k <= g.max_degree() + 1


def _random_bipartite_multigraph(seed):
    rng = random.Random(seed)
    na, nb = rng.randrange(1, 5), rng.randrange(1, 5)
    m = Multigraph(na + nb)
    for _ in range(rng.randrange(1, 14)):
        m.add_edge(rng.randrange(na), na + rng.randrange(nb))
    return m, list(range(na)), list(range(na, na + nb))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_konig_palette_exactly_delta(seed):
    m, a, b = _random_bipartite_multigraph(seed)
    col = konig_color(m, sides=(a, b))
    ok, _ = validate_proper(m, col)
    assert ok
    assert col.colored_count() == m.edge_count()
    assert col.k == m.max_degree()


def test_greedy_multigraph_color_within_bound():
    m = Multigraph(3)
    for _ in range(3):
        m.add_edge(0, 1)
    m.add_edge(1, 2)
    # max degree 4, multiplicity 3: Vizing bound delta + mu colors
    col = greedy_multigraph_color(m, m.max_degree() + m.max_multiplicity())
    ok, _ = validate_proper(m, col)
    assert ok
    assert col.colored_count() == m.edge_count()


# -- degree-sequence realization -----------------------------------------


def _closed_form_feasible(degrees):
    # even total and no vertex asking for more than the rest can supply
    total = sum(degrees)
    return bool(degrees) and total % 2 == 0 and 2 * max(degrees) <= total


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
def test_hakimi_feasibility_matches_closed_form(degrees):
    assert hakimi_feasible(degrees) == _closed_form_feasible(degrees)


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
def test_hakimi_realize_exact_degrees(degrees):
    h = hakimi_realize(degrees)
    if not _closed_form_feasible(degrees):
        assert h is None
        return
    assert h is not None
    for v, d in enumerate(degrees):
        assert h.degree(v) == d


# -- hamiltonian machinery -----------------------------------------------


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_dirac_cycle_on_random_dirac_graphs(seed):
    rng = random.Random(seed)
    n = rng.randrange(3, 12)
    g = random_graph(n, 0.7, seed)
    while 2 * g.min_degree() < n:
        v = min(range(n), key=g.degree)
        choices = [w for w in range(n) if w != v and not g.has_edge(v, w)]
        g.add_edge(v, rng.choice(choices))
    cycle = dirac_hamiltonian_cycle(g)
    assert sorted(cycle) == list(range(n))
    for i in range(n):
        assert g.has_edge(cycle[i], cycle[(i + 1) % n])


def test_dirac_rejects_sparse():
    with pytest.raises(HypothesisError):
        dirac_hamiltonian_cycle(cycle_graph(6))


def test_hamiltonian_path_between_on_complete():
    g = complete_graph(6)
    path = hamiltonian_path_between(g, 2, 5)
    assert path[0] == 2 and path[-1] == 5
    assert sorted(path) == list(range(6))
    for i in range(5):
        assert g.has_edge(path[i], path[i + 1])


def test_path_system_two_pairs_in_k8():
    g = complete_graph(8)
    paths = path_system(g, [(0, 1), (2, 3)])
    assert len(paths) == 2
    assert paths[0][0] == 0 and paths[0][-1] == 1 and len(paths[0]) == 3
    assert paths[1][0] == 2 and paths[1][-1] == 3
    flat = [v for p in paths for v in p]
    assert sorted(flat) == list(range(8))  # disjoint and spanning
    for p in paths:
        for i in range(len(p) - 1):
            assert g.has_edge(p[i], p[i + 1])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_path_system_random_dense(seed):
    rng = random.Random(seed)
    n = rng.choice([8, 10, 12])
    g = random_graph(n, 0.85, seed)
    while 2 * g.min_degree() < n + 4:
        v = min(range(n), key=g.degree)
        choices = [w for w in range(n) if w != v and not g.has_edge(v, w)]
        g.add_edge(v, rng.choice(choices))
    verts = rng.sample(range(n), 4)
    pairs = [tuple(verts[:2]), tuple(verts[2:])]
    paths = path_system(g, pairs)
    flat = [v for p in paths for v in p]
    assert sorted(flat) == list(range(n))
    for p, (a, b) in zip(paths, pairs):
        assert p[0] == a and p[-1] == b
        for i in range(len(p) - 1):
            assert g.has_edge(p[i], p[i + 1])
