"""Dynamic programming over labeled-graph construction expressions.

A state at an expression node summarizes one choice of deletion set S over
the vertices built so far: for every label set L, the total weight
(``scom``) and the maximum weight (``cmax``) of the surviving components
whose label set is exactly L. The deleted weight is implied: it is the node
weight minus the sum of all scom entries. States are kept sparsely as a set
of reachable (scom, cmax) pairs; both maps are stored as tuples indexed by
label-set bitmask (bit i-1 = label i).
"""

from __future__ import annotations

from typing import Iterable

from .caps import DEFAULT_UNARY_CAP
from .errors import SizeCapError
from .graphs import Solution, WeightedGraph, evaluate
from .expressions import (
    CExpression,
    Create,
    EvaluatedExpression,
    Relabel,
    Union2,
    eval_c_expression,
    label_count,
)

CwState = tuple[tuple[int, ...], tuple[int, ...]]


def cw_leaf(label: int, weight: int, c: int) -> set[CwState]:
    """The two leaf states: keep the vertex, or delete it."""
    size = 1 << c
    zero = (0,) * size
    kept_s = list(zero)
    kept_s[1 << (label - 1)] = weight
    kept = (tuple(kept_s), tuple(kept_s))
    return {(zero, zero), kept}


def _union_one(a: CwState, b: CwState) -> CwState:
    sa, ma = a
    sb, mb = b
    scom = tuple(x + y for x, y in zip(sa, sb))
    cmax = tuple(max(x, y) for x, y in zip(ma, mb))
    return scom, cmax


def cw_union(a_states: Iterable[CwState], b_states: Iterable[CwState]) -> set[CwState]:
    """Disjoint union: scom adds pointwise, cmax takes the pointwise max."""
    return {_union_one(a, b) for a in a_states for b in b_states}


def _relabel_one(i: int, j: int, state: CwState, c: int) -> CwState:
    ibit = 1 << (i - 1)
    jbit = 1 << (j - 1)
    size = 1 << c
    scom = [0] * size
    cmax = [0] * size
    s, m = state
    for mask in range(size):
        if not (s[mask] or m[mask]):
            continue
        target = (mask & ~ibit) | jbit if mask & ibit else mask
        scom[target] += s[mask]
        if m[mask] > cmax[target]:
            cmax[target] = m[mask]
    return tuple(scom), tuple(cmax)


def cw_relabel(i: int, j: int, states: Iterable[CwState], c: int) -> set[CwState]:
    """Relabel i to j: component mass moves from classes with i to i-free ones."""
    return {_relabel_one(i, j, state, c) for state in states}


def _join_one(i: int, j: int, state: CwState, c: int) -> CwState:
    ibit = 1 << (i - 1)
    jbit = 1 << (j - 1)
    s, m = state
    size = 1 << c
    total_i = sum(s[mask] for mask in range(size) if mask & ibit)
    total_j = sum(s[mask] for mask in range(size) if mask & jbit)
    if total_i == 0 or total_j == 0:
        return state
    scom = list(s)
    cmax = list(m)
    merged_labels = 0
    merged_weight = 0
    for mask in range(size):
        if mask & (ibit | jbit) and s[mask] > 0:
            merged_labels |= mask
            merged_weight += s[mask]
            scom[mask] = 0
            cmax[mask] = 0
    scom[merged_labels] += merged_weight
    cmax[merged_labels] = max(cmax[merged_labels], merged_weight)
    return tuple(scom), tuple(cmax)


def cw_join(i: int, j: int, states: Iterable[CwState], c: int) -> set[CwState]:
    """Join labels i and j.

    When either label class is entirely deleted the state passes through;
    otherwise every surviving component touching i or j collapses into one
    component whose label set is the union of theirs.
    """
    return {_join_one(i, j, state, c) for state in states}


def _dp_tables(
    expr: CExpression, weights: tuple[int, ...], c: int
) -> tuple[list[dict[CwState, tuple]], list[CExpression], int]:
    """Bottom-up tables with one first-encountered predecessor per state.

    Returns per-node state->provenance dicts in post-order, the node list in
    the same order, and the number of leaves. Provenance encodes how to walk
    back: leaves record whether the vertex was kept, unary nodes the child
    state, union nodes the pair of child states.
    """
    tables: list[dict[CwState, tuple]] = []
    nodes: list[CExpression] = []
    counter = 0

    def walk(node: CExpression) -> int:
        nonlocal counter
        if isinstance(node, Create):
            leaf_id = counter
            counter += 1
            size = 1 << c
            zero = (0,) * size
            kept_s = list(zero)
            kept_s[1 << (node.label - 1)] = weights[leaf_id]
            table = {
                (zero, zero): ("delete", leaf_id),
                (tuple(kept_s), tuple(kept_s)): ("keep", leaf_id),
            }
            tables.append(table)
            nodes.append(node)
            return len(tables) - 1
        if isinstance(node, Union2):
            left = walk(node.left)
            right = walk(node.right)
            table: dict[CwState, tuple] = {}
            for sa in sorted(tables[left]):
                for sb in sorted(tables[right]):
                    state = _union_one(sa, sb)
                    if state not in table:
                        table[state] = ("union", left, sa, right, sb)
            tables.append(table)
            nodes.append(node)
            return len(tables) - 1
        child = walk(node.child)
        table = {}
        if isinstance(node, Relabel):
            for sc in sorted(tables[child]):
                state = _relabel_one(node.old, node.new, sc, c)
                if state not in table:
                    table[state] = ("unary", child, sc)
        else:
            for sc in sorted(tables[child]):
                state = _join_one(node.a, node.b, sc, c)
                if state not in table:
                    table[state] = ("unary", child, sc)
        tables.append(table)
        nodes.append(node)
        return len(tables) - 1

    walk(expr)
    return tables, nodes, counter


def reachable_states(
    expr: CExpression, weights: Iterable[int] | None = None
) -> list[tuple[CExpression, set[CwState]]]:
    """Post-order list of (node, reachable state set); for auditing the DP."""
    evaluated = eval_c_expression(expr, weights)
    c = label_count(expr)
    tables, nodes, _ = _dp_tables(expr, evaluated.graph.weight, c)
    return [(node, set(table)) for node, table in zip(nodes, tables)]


def wvi_cw(
    expr: CExpression,
    weights: Iterable[int] | None = None,
    *,
    unary_cap: int = DEFAULT_UNARY_CAP,
) -> Solution:
    """Optimal weighted vertex integrity of the graph the expression builds.

    The answer reads off the root table: deleted weight (implied by scom)
    plus the heaviest surviving component, minimized over reachable states.
    The certificate is rebuilt from stored predecessors and re-checked by
    direct evaluation before returning.
    """
    evaluated: EvaluatedExpression = eval_c_expression(expr, weights)
    g: WeightedGraph = evaluated.graph
    if g.W > unary_cap:
        raise SizeCapError(f"total weight {g.W} exceeds the cap {unary_cap}")
    c = label_count(expr)
    tables, _, _ = _dp_tables(expr, g.weight, c)
    root = tables[-1]

    best_state = None
    best_obj = None
    for state in sorted(root):
        scom, cmax = state
        obj = (g.W - sum(scom)) + max(cmax)
        if best_obj is None or obj < best_obj:
            best_obj, best_state = obj, state
    assert best_state is not None

    deleted: set[int] = set()

    def trace(node_idx: int, state: CwState) -> None:
        prov = tables[node_idx][state]
        kind = prov[0]
        if kind == "delete":
            deleted.add(prov[1])
        elif kind == "keep":
            pass
        elif kind == "unary":
            trace(prov[1], prov[2])
        else:
            trace(prov[1], prov[2])
            trace(prov[3], prov[4])

    trace(len(tables) - 1, best_state)
    sol = evaluate(g, deleted)
    if sol.objective != best_obj:
        raise AssertionError(
            f"certificate scores {sol.objective}, table promised {best_obj}"
        )
    return sol
