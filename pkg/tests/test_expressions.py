"""Expression parsing, printing, evaluation, and the stock families."""

import pytest

from conftest import complete, path, star
from vintegrity import (
    Create,
    ExpressionFormatError,
    Join,
    Relabel,
    Union2,
    clique_expression,
    eval_c_expression,
    format_expression,
    label_count,
    parse_expression,
    path_expression,
    star_expression,
)


def test_join_of_two_singletons_is_an_edge():
    ev = eval_c_expression(parse_expression("e1,2(u(o1,o2))"))
    assert ev.graph.edges == ((0, 1),)
    assert ev.labels == (1, 2)


def test_relabel_single_vertex():
    ev = eval_c_expression(parse_expression("r1,2(o1)"))
    assert ev.graph.n == 1
    assert ev.labels == (2,)


def test_three_node_hand_evaluation():
    # Relabel one endpoint first; the join still produces a single edge.
    ev = eval_c_expression(parse_expression("e1,2(u(o1,r1,2(o1)))"))
    assert ev.graph.edges == ((0, 1),)
    assert ev.labels == (1, 2)


def test_disjoint_union_keeps_parts_apart():
    ev = eval_c_expression(parse_expression("u(o1,o1)"))
    assert ev.graph.m == 0


def test_leaf_weights():
    ev = eval_c_expression(parse_expression("u(o1,o2)"), [5, 7])
    assert ev.graph.weight == (5, 7)


def test_weight_count_must_match():
    with pytest.raises(ValueError):
        eval_c_expression(parse_expression("u(o1,o2)"), [5])


def test_format_round_trip():
    expr = Join(1, 3, Union2(Relabel(2, 3, Create(2)), Create(1)))
    assert parse_expression(format_expression(expr)) == expr
    ev_a = eval_c_expression(expr)
    ev_b = eval_c_expression(parse_expression(format_expression(expr)))
    assert ev_a == ev_b


def test_parse_errors_carry_offsets():
    with pytest.raises(ExpressionFormatError) as err:
        parse_expression("e1,1(o1)")
    assert err.value.offset == 0
    with pytest.raises(ExpressionFormatError) as err:
        parse_expression("u(o1 o2)")
    assert err.value.offset == 5
    with pytest.raises(ExpressionFormatError) as err:
        parse_expression("o1 trailing")
    assert err.value.offset == 3


def test_whitespace_insensitive():
    a = parse_expression(" e1,2( u( o1 , o2 ) ) ")
    b = parse_expression("e1,2(u(o1,o2))")
    assert a == b


def test_label_count():
    assert label_count(parse_expression("r5,2(o1)")) == 5


def test_path_family():
    for n in range(1, 7):
        ev = eval_c_expression(path_expression(n))
        assert ev.graph.edges == path(n).edges
    assert label_count(path_expression(6)) == 3


def test_clique_family():
    for n in range(1, 6):
        ev = eval_c_expression(clique_expression(n))
        assert ev.graph.edges == complete(n).edges
    assert label_count(clique_expression(5)) == 2


def test_star_family():
    for leaves in range(0, 5):
        ev = eval_c_expression(star_expression(leaves))
        assert ev.graph.edges == star(leaves).edges
