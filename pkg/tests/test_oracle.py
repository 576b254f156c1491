import pytest

from densecolor.errors import OracleTimeout
from densecolor.generate import gen_planted_overfull
from densecolor.graph import Multigraph
from densecolor.oracle import (
    OracleBudget,
    colorable_with,
    exact_chromatic_index,
    exhaustive_overfull_scan,
)

from .conftest import complete_graph, cycle_graph, petersen


def test_known_chromatic_indices():
    assert exact_chromatic_index(complete_graph(4)) == 3
    assert exact_chromatic_index(complete_graph(5)) == 5
    assert exact_chromatic_index(complete_graph(6)) == 5
    assert exact_chromatic_index(cycle_graph(5)) == 3
    assert exact_chromatic_index(cycle_graph(6)) == 2
    assert exact_chromatic_index(petersen()) == 4


def test_colorable_with_bounds():
    g = complete_graph(5)
    assert not colorable_with(g, 4)
    assert colorable_with(g, 5)


def test_multigraph_can_exceed_delta_plus_one():
    # triple edge between three vertices: chi' = 3 mu / 2... the Shannon
    # triangle with multiplicity 2 needs 3 colors at delta 4? build mu=2
    # triangle: every pair doubled, delta = 4, chi' = 6.
    m = Multigraph(3)
    for (u, v) in [(0, 1), (1, 2), (0, 2)]:
        m.add_edge(u, v)
        m.add_edge(u, v)
    assert exact_chromatic_index(m) == 6


def test_scan_finds_overfull_in_planted_instance():
    g = gen_planted_overfull(12, 2, seed=2)
    witnesses = exhaustive_overfull_scan(g, g.max_degree())
    assert witnesses
    sizes = {len(w) for w in witnesses}
    assert 11 in sizes  # the deleted-vertex witness


def test_scan_empty_on_complete_even():
    assert exhaustive_overfull_scan(complete_graph(8), 7) == []


def test_budget_rejects_large_instances():
    big = complete_graph(20)
    with pytest.raises(OracleTimeout):
        exact_chromatic_index(big, OracleBudget(max_vertices=14))
