"""Twin-class enumeration solvers.

An irredundant optimal deletion set takes all or nothing of every twin
class, so trying every union of classes is exact. The twin-cover variant
first contracts each twin clique outside the cover to one vertex carrying
the clique's total weight, which keeps the class count small regardless of
how large the cliques are.
"""

from __future__ import annotations

from typing import Iterable

from .caps import DEFAULT_ND_CAP
from .errors import SizeCapError
from .graphs import (
    Solution,
    WeightedGraph,
    connected_components,
    evaluate,
    strip_redundant,
    twin_classes,
)
from .params import verify_twin_cover


def wvi_nd(g: WeightedGraph, *, nd_cap: int = DEFAULT_ND_CAP) -> Solution:
    """Optimal weighted vertex integrity via 2**(twin class count) candidates.

    Each candidate union is stripped of redundant vertices before scoring;
    that never hurts the objective and keeps certificates small.
    """
    partition = twin_classes(g)
    nd = len(partition.classes)
    if nd > nd_cap:
        raise SizeCapError(f"2^{nd} twin-class unions exceed the cap of 2^{nd_cap}")
    best: Solution | None = None
    best_key: tuple[int, tuple[int, ...]] | None = None
    for mask in range(1 << nd):
        candidate: set[int] = set()
        for i in range(nd):
            if mask >> i & 1:
                candidate |= partition.classes[i]
        stripped = strip_redundant(g, candidate)
        sol = evaluate(g, stripped)
        key = (sol.objective, sol.sorted_deleted())
        if best_key is None or key < best_key:
            best, best_key = sol, key
    assert best is not None
    return best


def wvi_tc(g: WeightedGraph, cover: Iterable[int]) -> Solution:
    """Optimal weighted vertex integrity given a twin cover.

    Pipeline: validate the cover, contract every clique outside it into a
    single vertex of the clique's total weight, solve the contracted graph
    by twin-class enumeration, then expand contracted vertices back.
    """
    cov = verify_twin_cover(g, cover)
    cover_order = sorted(cov)
    cliques = connected_components(g, cov)

    contracted_n = len(cover_order) + len(cliques)
    weights = [g.weight[v] for v in cover_order]
    weights += [sum(g.weight[v] for v in comp) for comp in cliques]

    index = {v: i for i, v in enumerate(cover_order)}
    edges: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if u in cov and v in cov:
            edges.add((index[u], index[v]))
    for ci, comp in enumerate(cliques):
        cid = len(cover_order) + ci
        attached = {index[u] for v in comp for u in g.adjacency[v] if u in cov}
        for a in attached:
            edges.add((a, cid) if a < cid else (cid, a))
    contracted = WeightedGraph.build(contracted_n, edges, weights)

    inner = wvi_nd(contracted)
    expanded: set[int] = set()
    for cv in inner.deleted:
        if cv < len(cover_order):
            expanded.add(cover_order[cv])
        else:
            expanded |= cliques[cv - len(cover_order)]
    sol = evaluate(g, expanded)
    if sol.objective != inner.objective:
        raise AssertionError(
            f"expanding the contracted optimum changed the objective: "
            f"{inner.objective} -> {sol.objective}"
        )
    return sol
