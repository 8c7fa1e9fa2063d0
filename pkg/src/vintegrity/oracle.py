"""Exponential-time exact ground truth.

Every solver and every instance generator in this package is validated
against these routines at desk scale. They enumerate candidate sets as
bitmasks, prune only on the deleted weight alone, and break ties toward
the lexicographically smallest certificate. Obviousness beats speed here;
the single concession is that subsets of simplicial vertices are skipped
where irredundancy theory allows it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .caps import DEFAULT_ORACLE_CAP
from .errors import SizeCapError, SolverInputError
from .graphs import (
    Solution,
    WeightedGraph,
    _mask_weight,
    component_masks,
    evaluate,
    simplicial_vertices,
)


@dataclass(frozen=True)
class FeasibilityConstraint:
    """Deletion sets must avoid ``forbidden`` and stay within ``budget``."""

    forbidden: frozenset[int]
    budget: int | None = None

    def __post_init__(self):
        if self.budget is not None and self.budget < 0:
            raise ValueError("budget must be non-negative")


def _check_vertex_cap(g: WeightedGraph, cap: int) -> None:
    if g.n > cap:
        raise SizeCapError(f"oracle limited to {cap} vertices, got {g.n}")


def wvi_exact(g: WeightedGraph, *, cap: int = DEFAULT_ORACLE_CAP) -> Solution:
    """Optimal weighted vertex integrity by subset enumeration.

    Only subsets of non-simplicial vertices are tried: some optimal
    irredundant set exists and such sets avoid simplicial vertices.
    """
    _check_vertex_cap(g, cap)
    candidates = [v for v in range(g.n) if v not in simplicial_vertices(g)]
    adj = g.adjacency_masks
    weight = g.weight
    full = (1 << g.n) - 1

    best_obj = None
    best_key: tuple[int, ...] | None = None
    best_mask = 0
    for mask in range(1 << len(candidates)):
        smask = 0
        dw = 0
        mm = mask
        while mm:
            low = mm & -mm
            v = candidates[low.bit_length() - 1]
            smask |= 1 << v
            dw += weight[v]
            mm ^= low
        if best_obj is not None and dw > best_obj:
            continue
        heaviest = 0
        for comp in component_masks(adj, full & ~smask):
            cw = _mask_weight(comp, weight)
            if cw > heaviest:
                heaviest = cw
        obj = dw + heaviest
        if best_obj is None or obj < best_obj:
            best_obj, best_mask = obj, smask
            best_key = None
        elif obj == best_obj:
            if best_key is None:
                best_key = _sorted_vertices(best_mask)
            key = _sorted_vertices(smask)
            if key < best_key:
                best_mask, best_key = smask, key
    return evaluate(g, _sorted_vertices(best_mask))


def _sorted_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def vi_exact(g: WeightedGraph, *, cap: int = DEFAULT_ORACLE_CAP) -> Solution:
    """Unweighted vertex integrity: every weight treated as 1."""
    return wvi_exact(g.unit_view(), cap=cap)


def feasible_vi_exact(
    g: WeightedGraph,
    constraint: FeasibilityConstraint,
    *,
    cap: int = DEFAULT_ORACLE_CAP,
) -> Solution:
    """Best unweighted objective over sets avoiding D and within the budget."""
    _check_vertex_cap(g, cap)
    for v in constraint.forbidden:
        if not 0 <= v < g.n:
            raise ValueError(f"forbidden vertex {v} outside 0..{g.n - 1}")
    unit = g.unit_view()
    allowed = [v for v in range(g.n) if v not in constraint.forbidden]
    budget = constraint.budget if constraint.budget is not None else g.n
    best: tuple[int, tuple[int, ...]] | None = None
    for size in range(min(budget, len(allowed)) + 1):
        for combo in combinations(allowed, size):
            sol = evaluate(unit, combo)
            key = (sol.objective, combo)
            if best is None or key < best:
                best = key
    assert best is not None
    return evaluate(unit, best[1])


def coc_exact(
    g: WeightedGraph, limit: int, *, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[int, frozenset[int]]:
    """Minimum deletions so every remaining component has at most ``limit`` vertices."""
    if limit < 1:
        raise ValueError("component order limit must be at least 1")
    _check_vertex_cap(g, cap)
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if all(
                comp.bit_count() <= limit
                for comp in component_masks(adj, full & ~smask)
            ):
                return size, frozenset(combo)
    return g.n, frozenset(range(g.n))


def connected_safe_set_exact(
    g: WeightedGraph, *, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[int, frozenset[int]]:
    """Smallest non-empty connected set at least as large as every component it leaves.

    ``S = V`` counts as vacuously safe. Rejects disconnected inputs.
    """
    _check_vertex_cap(g, cap)
    if g.n == 0:
        raise SolverInputError("empty graph has no safe set")
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    if len(component_masks(adj, full)) != 1:
        raise SolverInputError("connected safe set needs a connected graph")
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if len(component_masks(adj, smask)) != 1:
                continue
            if all(
                comp.bit_count() <= size
                for comp in component_masks(adj, full & ~smask)
            ):
                return size, frozenset(combo)
    raise AssertionError("S = V is always safe")  # pragma: no cover


def line_integrity_exact(
    g: WeightedGraph, *, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[int, frozenset[tuple[int, int]]]:
    """Minimum of |F| + (most edges in a component of g - F) over edge sets F."""
    if g.m > cap:
        raise SizeCapError(f"edge oracle limited to {cap} edges, got {g.m}")
    edges = g.edges
    best: tuple[int, tuple[tuple[int, int], ...]] | None = None
    for size in range(g.m + 1):
        if best is not None and size >= best[0]:
            break
        for combo in combinations(edges, size):
            removed = set(combo)
            kept = [e for e in edges if e not in removed]
            adj = [0] * g.n
            for u, v in kept:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            busiest = 0
            for comp in component_masks(tuple(adj), (1 << g.n) - 1):
                count = sum(1 for u, v in kept if comp >> u & 1 and comp >> v & 1)
                busiest = max(busiest, count)
            key = (size + busiest, combo)
            if best is None or key < best:
                best = key
    assert best is not None
    return best[0], frozenset(best[1])
