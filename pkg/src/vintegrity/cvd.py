"""Unweighted solver driven by a cluster deletion set.

Outline: pick a largest surviving clique, guess which of its attached twin
classes the solution swallows whole, guess the solution's intersection with
the deletion set, then finish with a budget-bounded subproblem in which the
deletion set is forbidden. The subproblem enumeration leans on two exchange
facts: within one clique, vertices attached to the same deletion-set
components are interchangeable, and across cliques of the same attachment
type only the budget-many largest ever need to be touched.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .caps import DEFAULT_CVD_CAP
from .errors import SizeCapError, SolverInputError
from .graphs import (
    Solution,
    WeightedGraph,
    connected_components,
    evaluate,
    twin_classes,
)
from .params import verify_cvd_set


@dataclass(frozen=True)
class ClusterType:
    """Attachment fingerprint of one clique outside the deletion set.

    ``profile`` counts, for every non-empty set of deletion-set components,
    the clique vertices attached to exactly that set. Two cliques compare
    equal when the counts agree and they either both have or both lack
    private (unattached) vertices; private counts may differ.
    """

    profile: tuple[tuple[tuple[int, ...], int], ...]
    has_private: bool


@dataclass(frozen=True)
class NiceInstance:
    """Subproblem input: graph, budget, and forbidden cluster deletion set.

    Valid when the forbidden set leaves only cliques, spans at most
    ``budget`` components, and every twin class outside it is either small
    (at most ``budget`` vertices) or unattached to it.
    """

    g: WeightedGraph
    k: int
    d: frozenset[int]


def _deletion_components(g: WeightedGraph, d: frozenset[int]) -> list[frozenset[int]]:
    outside = [v for v in range(g.n) if v not in d]
    return connected_components(g, outside)


def _attachment(g: WeightedGraph, dcomps: list[frozenset[int]], v: int) -> frozenset[int]:
    nbrs = set(g.adjacency[v])
    return frozenset(i for i, comp in enumerate(dcomps) if nbrs & comp)


def component_types(
    g: WeightedGraph, d: Iterable[int]
) -> dict[frozenset[int], ClusterType]:
    """Type of every clique of g minus d, keyed by the clique's vertex set.

    Iteration order follows the cliques' smallest vertices, so type ids by
    first occurrence are deterministic.
    """
    ds = verify_cvd_set(g, d)
    dcomps = _deletion_components(g, ds)
    out: dict[frozenset[int], ClusterType] = {}
    for clique in connected_components(g, ds):
        counts: dict[tuple[int, ...], int] = {}
        has_private = False
        for v in clique:
            att = tuple(sorted(_attachment(g, dcomps, v)))
            if att:
                counts[att] = counts.get(att, 0) + 1
            else:
                has_private = True
        profile = tuple(sorted(counts.items()))
        out[clique] = ClusterType(profile=profile, has_private=has_private)
    return out


def validate_nice_instance(inst: NiceInstance) -> None:
    if not inst.g.is_unit_weighted():
        raise SolverInputError("subproblem instances carry unit weights")
    if inst.k < 0:
        raise SolverInputError("budget must be non-negative")
    verify_cvd_set(inst.g, inst.d)
    if len(_deletion_components(inst.g, inst.d)) > inst.k:
        raise SolverInputError("forbidden set spans more components than the budget")
    d_adjacent = 0
    for v in inst.d:
        d_adjacent |= 1 << v
    for cls in twin_classes(inst.g).classes:
        if cls & inst.d or len(cls) <= inst.k:
            continue
        if any(inst.g.adjacency_masks[v] & d_adjacent for v in cls):
            raise SolverInputError(
                f"twin class {sorted(cls)} is large yet attached to the forbidden set"
            )


def _count_vectors(limits: list[int], cap: int) -> list[tuple[int, ...]]:
    """All vectors with 0 <= v_i <= limits[i] and sum <= cap, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], spent: int) -> None:
        if len(prefix) == len(limits):
            out.append(prefix)
            return
        for c in range(min(limits[len(prefix)], cap - spent) + 1):
            rec(prefix + (c,), spent + c)

    rec((), 0)
    return out


def solve_subvicvd(inst: NiceInstance) -> Solution:
    """Best set avoiding the forbidden set, of size at most the budget.

    Phase 1 picks which cliques to touch: per attachment type, only the
    budget-many largest (ties to the smallest vertex id) are candidates.
    Phase 2 picks how many vertices of each same-attachment group inside a
    touched clique to delete, realized on the group's smallest ids. Every
    enumerated candidate is scored directly and the best one kept.
    """
    validate_nice_instance(inst)
    g, k, d = inst.g, inst.k, inst.d
    dcomps = _deletion_components(g, d)
    types = component_types(g, d)

    by_type: dict[ClusterType, list[frozenset[int]]] = {}
    for clique in types:
        by_type.setdefault(types[clique], []).append(clique)
    pool: list[frozenset[int]] = []
    for cliques in by_type.values():
        ranked = sorted(cliques, key=lambda c: (-len(c), min(c)))
        pool.extend(ranked[:k])
    pool.sort(key=min)

    groups_of: dict[frozenset[int], list[list[int]]] = {}
    for clique in pool:
        grouped: dict[tuple[int, ...], list[int]] = {}
        for v in sorted(clique):
            att = tuple(sorted(_attachment(g, dcomps, v)))
            if att:
                grouped.setdefault(att, []).append(v)
        groups_of[clique] = [grouped[a] for a in sorted(grouped)]

    best = evaluate(g, ())
    best_key = (best.objective, best.sorted_deleted())
    for r in range(1, min(k, len(pool)) + 1):
        for chosen in combinations(pool, r):
            group_lists = [groups_of[c] for c in chosen]
            per_clique: list[list[tuple[int, ...]]] = []
            for groups in group_lists:
                vectors = [
                    vec
                    for vec in _count_vectors([len(gr) for gr in groups], k)
                    if sum(vec) >= 1
                ]
                per_clique.append(vectors)

            def assemble(idx: int, total: int, picked: list[int]) -> None:
                nonlocal best, best_key
                if idx == len(chosen):
                    sol = evaluate(g, picked)
                    key = (sol.objective, sol.sorted_deleted())
                    if key < best_key:
                        best, best_key = sol, key
                    return
                for vec in per_clique[idx]:
                    take = sum(vec)
                    if total + take > k:
                        continue
                    extra = [
                        v
                        for gr, cnt in zip(group_lists[idx], vec)
                        for v in gr[:cnt]
                    ]
                    assemble(idx + 1, total + take, picked + extra)

            assemble(0, 0, [])
    return best


def vi_cvd(
    g: WeightedGraph, d: Iterable[int], *, k_cap: int = DEFAULT_CVD_CAP
) -> Solution:
    """Optimal unweighted vertex integrity given a cluster deletion set.

    Guesses run over subsets of the deletion set and over unions of the
    attached twin classes of one largest clique; every guess spawns a
    subproblem whose budget is the deletion-set size. Attached classes of
    the chosen clique are all guessed (not only the large ones), which keeps
    the leftover below the budget without any extra exchange argument.
    """
    if not g.is_unit_weighted():
        raise SolverInputError("this solver handles unit weights only")
    ds = verify_cvd_set(g, d)
    k = len(ds)
    if k > k_cap:
        raise SizeCapError(f"deletion set of size {k} exceeds the cap {k_cap}")

    cliques = connected_components(g, ds)
    attached_classes: list[frozenset[int]] = []
    if cliques:
        top_size = max(len(c) for c in cliques)
        big = next(c for c in cliques if len(c) == top_size)
        grouped: dict[int, set[int]] = {}
        for v in sorted(big):
            dmask = 0
            for u in g.adjacency[v]:
                if u in ds:
                    dmask |= 1 << u
            if dmask:
                grouped.setdefault(dmask, set()).add(v)
        attached_classes = [frozenset(grouped[m]) for m in sorted(grouped)]

    d_list = sorted(ds)
    best_sol: Solution | None = None
    best_key: tuple[int, tuple[int, ...]] | None = None
    for sd_mask in range(1 << len(d_list)):
        s_d = {d_list[i] for i in range(len(d_list)) if sd_mask >> i & 1}
        for sc_mask in range(1 << len(attached_classes)):
            s_c: set[int] = set()
            for i in range(len(attached_classes)):
                if sc_mask >> i & 1:
                    s_c |= attached_classes[i]
            removed = s_c | s_d
            sub_g, back = g.induced(v for v in range(g.n) if v not in removed)
            fwd = {old: new for new, old in enumerate(back)}
            d_prime = frozenset(fwd[v] for v in ds - s_d)
            d_plus = _absorb_large_attached_classes(sub_g, d_prime, k)
            sub_sol = solve_subvicvd(NiceInstance(g=sub_g, k=k, d=d_plus))
            total = frozenset(removed | {back[v] for v in sub_sol.deleted})
            obj = len(removed) + sub_sol.objective
            key = (obj, tuple(sorted(total)))
            if best_key is None or key < best_key:
                best_key = key
                best_sol = evaluate(g, total)
    assert best_sol is not None
    if best_sol.objective != best_key[0]:
        raise AssertionError(
            f"assembled certificate scores {best_sol.objective}, "
            f"guesses promised {best_key[0]}"
        )
    return best_sol


def _absorb_large_attached_classes(
    g: WeightedGraph, d: frozenset[int], k: int
) -> frozenset[int]:
    """Grow the forbidden set by twin classes too large to ever be deleted.

    A class of more than k vertices cannot fit in a size-k set that takes
    classes whole, so forbidding it is safe; only classes attached to the
    current forbidden set are added, which keeps the component count from
    growing. Iterates to a fixpoint so the niceness invariant really holds.
    """
    classes = twin_classes(g).classes
    d_plus = set(d)
    changed = True
    while changed:
        changed = False
        dmask = 0
        for v in d_plus:
            dmask |= 1 << v
        for cls in classes:
            if len(cls) <= k or cls & d_plus:
                continue
            if any(g.adjacency_masks[v] & dmask for v in cls):
                d_plus |= cls
                changed = True
    return frozenset(d_plus)
