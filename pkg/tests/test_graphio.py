"""Graph file format: parsing, disambiguation, and exact round-trips."""

import pytest
from hypothesis import given, settings

from conftest import weighted_graphs
from vintegrity import GraphFormatError, WeightedGraph
from vintegrity.graphio import dumps, loads, loads_vertex_set


def test_loads_with_weights():
    g = loads("3 2\n5 6 7\n0 1\n1 2\n")
    assert g.weight == (5, 6, 7)
    assert g.edges == ((0, 1), (1, 2))


def test_loads_without_weights_defaults_to_unit():
    g = loads("3 2\n0 1\n1 2\n")
    assert g.weight == (1, 1, 1)


def test_comments_and_whitespace():
    g = loads("# a path\n3 2  # counts\n\n1 1 1\n0 1\n1 2  # last\n")
    assert g.n == 3


def test_two_vertex_disambiguation():
    # "0 1" cannot be a weight line (weights are positive), so it is the edge.
    g = loads("2 1\n0 1\n")
    assert g.weight == (1, 1) and g.edges == ((0, 1),)
    h = loads("2 1\n4 4\n0 1\n")
    assert h.weight == (4, 4)


def test_rejects_bad_token_count():
    with pytest.raises(GraphFormatError):
        loads("3 2\n0 1\n")


def test_rejects_bad_edge():
    with pytest.raises(GraphFormatError):
        loads("3 1\n1 0\n")
    with pytest.raises(GraphFormatError):
        loads("3 1\n0 3\n")


def test_rejects_garbage():
    with pytest.raises(GraphFormatError):
        loads("3 x\n")


@given(weighted_graphs())
@settings(max_examples=80)
def test_round_trip_is_exact(g):
    assert loads(dumps(g)) == g


def test_round_trip_preserves_big_weights():
    g = WeightedGraph.build(2, [(0, 1)], [2**40, 3])
    assert loads(dumps(g)) == g


def test_vertex_set_files():
    assert loads_vertex_set("1 3  # certificate\n5\n") == frozenset({1, 3, 5})
    assert loads_vertex_set("# nothing\n") == frozenset()
