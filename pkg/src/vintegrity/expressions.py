"""Labeled-graph construction expressions.

An expression is a rooted binary tree built from four node kinds: create a
single vertex with a label, disjoint union, relabel, and join (add every
edge between two label classes). Evaluating one yields a labeled graph
whose vertex ids follow the left-to-right leaf order.

Text format: leaves ``o<i>``, unary ``r<i>,<j>(...)`` (relabel i to j) and
``e<i>,<j>(...)`` (join i with j), binary ``u(...,...)``. Whitespace is
insignificant; parse errors carry byte offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ExpressionFormatError
from .graphs import WeightedGraph


@dataclass(frozen=True)
class Create:
    label: int

    def __post_init__(self):
        if self.label < 1:
            raise ValueError("labels start at 1")


@dataclass(frozen=True)
class Union2:
    left: "CExpression"
    right: "CExpression"


@dataclass(frozen=True)
class Relabel:
    old: int
    new: int
    child: "CExpression"

    def __post_init__(self):
        if self.old < 1 or self.new < 1 or self.old == self.new:
            raise ValueError("relabel needs two distinct labels >= 1")


@dataclass(frozen=True)
class Join:
    a: int
    b: int
    child: "CExpression"

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.a == self.b:
            raise ValueError("join needs two distinct labels >= 1")


CExpression = Union[Create, Union2, Relabel, Join]


def label_count(expr: CExpression) -> int:
    """Smallest universe size c covering every label in the expression."""
    if isinstance(expr, Create):
        return expr.label
    if isinstance(expr, Union2):
        return max(label_count(expr.left), label_count(expr.right))
    if isinstance(expr, Relabel):
        return max(expr.old, expr.new, label_count(expr.child))
    return max(expr.a, expr.b, label_count(expr.child))


def leaf_count(expr: CExpression) -> int:
    if isinstance(expr, Create):
        return 1
    if isinstance(expr, Union2):
        return leaf_count(expr.left) + leaf_count(expr.right)
    return leaf_count(expr.child)


@dataclass(frozen=True)
class EvaluatedExpression:
    """Result of evaluating an expression: the graph plus per-vertex labels.

    Vertex i is the i-th leaf in left-to-right order.
    """

    graph: WeightedGraph
    labels: tuple[int, ...]


def eval_c_expression(
    expr: CExpression, weights: Iterable[int] | None = None
) -> EvaluatedExpression:
    """Evaluate to a labeled weighted graph; weights are per leaf, default 1."""
    labels: list[int] = []
    edges: set[tuple[int, int]] = set()

    def walk(node: CExpression) -> list[int]:
        if isinstance(node, Create):
            labels.append(node.label)
            return [len(labels) - 1]
        if isinstance(node, Union2):
            return walk(node.left) + walk(node.right)
        vids = walk(node.child)
        if isinstance(node, Relabel):
            for v in vids:
                if labels[v] == node.old:
                    labels[v] = node.new
            return vids
        left = [v for v in vids if labels[v] == node.a]
        right = [v for v in vids if labels[v] == node.b]
        for u in left:
            for v in right:
                edges.add((u, v) if u < v else (v, u))
        return vids

    walk(expr)
    n = len(labels)
    w = tuple(weights) if weights is not None else (1,) * n
    if len(w) != n:
        raise ValueError(f"expected {n} leaf weights, got {len(w)}")
    return EvaluatedExpression(
        graph=WeightedGraph(n, tuple(sorted(edges)), w), labels=tuple(labels)
    )


# ---------------------------------------------------------------------------
# Text format


def format_expression(expr: CExpression) -> str:
    if isinstance(expr, Create):
        return f"o{expr.label}"
    if isinstance(expr, Union2):
        return f"u({format_expression(expr.left)},{format_expression(expr.right)})"
    if isinstance(expr, Relabel):
        return f"r{expr.old},{expr.new}({format_expression(expr.child)})"
    return f"e{expr.a},{expr.b}({format_expression(expr.child)})"


def parse_expression(text: str) -> CExpression:
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            raise ExpressionFormatError(f"expected {ch!r}", pos)
        pos += 1

    def integer() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ExpressionFormatError("expected a label", start)
        return int(text[start:pos])

    def node() -> CExpression:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ExpressionFormatError("unexpected end of input", pos)
        head = text[pos]
        at = pos
        if head == "o":
            pos += 1
            return Create(integer())
        if head == "u":
            pos += 1
            expect("(")
            left = node()
            expect(",")
            right = node()
            expect(")")
            return Union2(left, right)
        if head in ("r", "e"):
            pos += 1
            i = integer()
            expect(",")
            j = integer()
            expect("(")
            child = node()
            expect(")")
            try:
                return Relabel(i, j, child) if head == "r" else Join(i, j, child)
            except ValueError as exc:
                raise ExpressionFormatError(str(exc), at) from None
        raise ExpressionFormatError(f"unexpected character {head!r}", pos)

    out = node()
    skip_ws()
    if pos != len(text):
        raise ExpressionFormatError("trailing input", pos)
    return out


# ---------------------------------------------------------------------------
# Stock expressions for common families (3 labels suffice for paths, 2 for
# cliques and unions of cliques).


def path_expression(n: int) -> CExpression:
    """A path on n vertices; leaf order matches path order."""
    if n < 1:
        raise ValueError("need at least one vertex")
    expr: CExpression = Create(1)
    if n == 1:
        return expr
    # Grow one endpoint at a time: settled vertices carry label 1, the
    # live endpoint label 2, the newcomer label 3.
    expr = Join(1, 2, Union2(expr, Create(2)))
    for _ in range(n - 2):
        expr = Join(2, 3, Union2(expr, Create(3)))
        expr = Relabel(2, 1, expr)
        expr = Relabel(3, 2, expr)
    return expr


def clique_expression(n: int) -> CExpression:
    """A complete graph on n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    expr: CExpression = Create(1)
    for _ in range(n - 1):
        expr = Relabel(2, 1, Join(1, 2, Union2(expr, Create(2))))
    return expr


def star_expression(leaves: int) -> CExpression:
    """A star with the center first in leaf order."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    expr: CExpression = Create(1)
    for _ in range(leaves):
        expr = Join(1, 2, Union2(expr, Create(2)))
    return expr
