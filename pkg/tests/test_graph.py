import pytest
from hypothesis import given, strategies as st

from densecolor.errors import GraphFormatError
from densecolor.graph import Multigraph, SimpleGraph, eid, format_edge_list, parse_edge_list

from .conftest import complete_graph, random_graph


def test_eid_canonical_order():
    assert eid(3, 1) == (1, 3, 0)
    assert eid(1, 3, 2) == (1, 3, 2)
    with pytest.raises(ValueError):
        eid(2, 2)


def test_simple_graph_basics():
    g = SimpleGraph(4)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.edge_count() == 2
    assert sorted(g.neighbors(1)) == [0, 2]
    g.remove_edge(0, 1)
    assert g.edge_count() == 1
    with pytest.raises(ValueError):
        g.remove_edge(0, 1)
    with pytest.raises(ValueError):
        g.add_edge(2, 2)


def test_induced_and_deleted_subgraphs():
    g = complete_graph(6)
    sub = g.induced_subgraph({0, 1, 2})
    assert sub.num_vertices() == 3
    assert sub.edge_count() == 3
    rest = g.without_vertices({0})
    assert rest.num_vertices() == 5
    assert rest.edge_count() == 10
    assert 0 not in rest.vertices
    # originals untouched
    assert g.edge_count() == 15


def test_copy_is_independent():
    g = complete_graph(4)
    h = g.copy()
    h.remove_edge(0, 1)
    assert g.has_edge(0, 1)
    assert not h.has_edge(0, 1)


def test_multigraph_counts_copies():
    m = Multigraph(3)
    e1 = m.add_edge(0, 1)
    e2 = m.add_edge(0, 1)
    assert e1 == (0, 1, 0)
    assert e2 == (0, 1, 1)
    assert m.multiplicity(0, 1) == 2
    assert m.degree(0) == 2
    assert m.edge_count() == 2
    assert m.max_multiplicity() == 2


def test_parse_format_round_trip_fixed():
    g = complete_graph(5)
    text = format_edge_list(g)
    h = parse_edge_list(text)
    assert h.num_vertices() == 5
    assert sorted(h.edges()) == sorted(g.edges())


@pytest.mark.parametrize(
    "bad",
    [
        "",                      # no header
        "p 4\n",                 # short header
        "p 4 1\ne 0 4\n",        # vertex out of range
        "p 4 2\ne 0 1\n",        # edge count mismatch
        "p 4 1\ne 0 1\ne 0 1\n", # duplicate edge / count mismatch
        "p 4 1\nx 0 1\n",        # unknown record
    ],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_edge_list(bad)


@given(st.integers(0, 10_000))
def test_parse_format_round_trip_random(seed):
    g = random_graph(9, 0.5, seed)
    h = parse_edge_list(format_edge_list(g))
    assert sorted(h.edges()) == sorted(g.edges())
    assert [h.degree(v) for v in range(9)] == [g.degree(v) for v in range(9)]
