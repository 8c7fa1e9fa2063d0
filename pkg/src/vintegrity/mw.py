"""Dynamic programming over a modular decomposition.

For a guessed bound on the heaviest surviving component, each tree node
gets the minimum weight that must be deleted from its subgraph so that no
surviving component inside it outweighs the bound; the answer is the best
bound-plus-table value over all bounds up to the total weight. Every bound
in 1..W is tried: the per-bound table is not a monotone function one could
binary-search against, because the bound both relaxes constraints and
shifts which deletions pay off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import inf

from .caps import DEFAULT_UNARY_CAP
from .errors import SizeCapError, SolverInputError
from .graphs import (
    Solution,
    WeightedGraph,
    component_masks,
    evaluate,
    strip_redundant,
)
from .params import MDLeaf, MDTree, md_reconstructs, modular_decomposition


def mw_node_transition(
    quotient_edges: tuple[tuple[int, int], ...],
    child_weights: tuple[int, ...],
    child_mus: tuple[float, ...],
    bound: int,
) -> tuple[float, tuple[frozenset[int], frozenset[int], frozenset[int]]]:
    """One inner-node step: best admissible (full, partial, untouched) split.

    Children marked full are deleted whole; partial children must be
    isolated in the quotient minus the full ones and recurse via their own
    table value; every surviving quotient component made of untouched
    children must weigh at most ``bound``. Returns the minimum total deleted
    weight and the minimizing partition (children indexed from 0).
    """
    c = len(child_weights)
    masks = [0] * c
    for i, j in quotient_edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    best: float = inf
    best_split: tuple[frozenset[int], frozenset[int], frozenset[int]] | None = None
    for full_mask in range(1 << c):
        value: float = 0
        partial: list[int] = []
        untouched: list[int] = []
        mm = full_mask
        while mm:
            low = mm & -mm
            value += child_weights[low.bit_length() - 1]
            mm ^= low
        alive = ((1 << c) - 1) & ~full_mask
        ok = True
        for comp in component_masks(tuple(masks), alive):
            members = []
            m = comp
            while m:
                low = m & -m
                members.append(low.bit_length() - 1)
                m ^= low
            if len(members) == 1:
                i = members[0]
                if child_weights[i] <= bound:
                    untouched.append(i)
                elif child_mus[i] != inf:
                    value += child_mus[i]
                    partial.append(i)
                else:
                    ok = False
                    break
            else:
                if sum(child_weights[i] for i in members) <= bound:
                    untouched.extend(members)
                else:
                    ok = False
                    break
        if ok and value < best:
            best = value
            full = frozenset(i for i in range(c) if full_mask >> i & 1)
            best_split = (full, frozenset(partial), frozenset(untouched))
    if best_split is None:
        best_split = (frozenset(), frozenset(), frozenset())
    return best, best_split


@dataclass
class _FlatNode:
    is_leaf: bool
    vertex: int = -1
    children: tuple[int, ...] = ()
    quotient_masks: tuple[int, ...] = ()
    subtree_vertices: frozenset[int] = frozenset()
    subtree_weight: int = 0
    # Lazy caches shared across all bounds.
    full_weight: list[int] = field(default_factory=list)
    comp_cache: dict[int, tuple[tuple[int, ...], ...]] = field(default_factory=dict)


def _flatten(md: MDTree, g: WeightedGraph) -> list[_FlatNode]:
    nodes: list[_FlatNode] = []

    def walk(tree: MDTree) -> int:
        if isinstance(tree, MDLeaf):
            nodes.append(
                _FlatNode(
                    is_leaf=True,
                    vertex=tree.vertex,
                    subtree_vertices=frozenset((tree.vertex,)),
                    subtree_weight=g.weight[tree.vertex],
                )
            )
            return len(nodes) - 1
        child_ids = tuple(walk(c) for c in tree.children)
        c = len(child_ids)
        masks = [0] * c
        for i, j in tree.quotient_edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        verts: set[int] = set()
        total = 0
        for ci in child_ids:
            verts |= nodes[ci].subtree_vertices
            total += nodes[ci].subtree_weight
        weights = [nodes[ci].subtree_weight for ci in child_ids]
        full_weight = [0] * (1 << c)
        for mask in range(1, 1 << c):
            low = mask & -mask
            full_weight[mask] = full_weight[mask ^ low] + weights[low.bit_length() - 1]
        nodes.append(
            _FlatNode(
                is_leaf=False,
                children=child_ids,
                quotient_masks=tuple(masks),
                subtree_vertices=frozenset(verts),
                subtree_weight=total,
                full_weight=full_weight,
            )
        )
        return len(nodes) - 1

    walk(md)
    return nodes


def _components_of(
    node: _FlatNode, full_mask: int
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Quotient components once the full-deleted children are gone.

    Each entry is (member child indices, their total subtree weight); cached
    per mask because the structure does not depend on the bound.
    """
    cached = node.comp_cache.get(full_mask)
    if cached is not None:
        return cached
    c = len(node.children)
    alive = ((1 << c) - 1) & ~full_mask
    comps = []
    for comp in component_masks(node.quotient_masks, alive):
        members = []
        m = comp
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        comps.append((tuple(members), node.full_weight[comp]))
    out = tuple(comps)
    node.comp_cache[full_mask] = out
    return out


def _mu_pass(
    nodes: list[_FlatNode], bound: int, choices: list[int] | None
) -> float:
    """Bottom-up table fill for one bound; returns the root value.

    When ``choices`` is given, the minimizing full-deletion mask per inner
    node is recorded there (smallest mask wins ties).
    """
    mu: list[float] = [0.0] * len(nodes)
    for idx, node in enumerate(nodes):
        if node.is_leaf:
            mu[idx] = 0 if node.subtree_weight <= bound else inf
            continue
        c = len(node.children)
        best: float = inf
        best_mask = 0
        for full_mask in range(1 << c):
            value: float = node.full_weight[full_mask]
            if value >= best:
                continue
            for members, comp_weight in _components_of(node, full_mask):
                if len(members) == 1:
                    if comp_weight <= bound:
                        continue
                    value += mu[node.children[members[0]]]
                elif comp_weight > bound:
                    value = inf
                if value >= best:
                    break
            if value < best:
                best = value
                best_mask = full_mask
        mu[idx] = best
        if choices is not None:
            choices[idx] = best_mask
    return mu[len(nodes) - 1]


def mu_profile(
    g: WeightedGraph, md: MDTree | None = None, *, unary_cap: int = DEFAULT_UNARY_CAP
) -> list[float]:
    """Root table value for every bound 1..W; exposed for auditing."""
    md = _checked_tree(g, md, unary_cap)
    nodes = _flatten(md, g)
    return [_mu_pass(nodes, bound, None) for bound in range(1, g.W + 1)]


def _checked_tree(g: WeightedGraph, md: MDTree | None, unary_cap: int) -> MDTree:
    if g.W > unary_cap:
        raise SizeCapError(f"total weight {g.W} exceeds the cap {unary_cap}")
    if md is None:
        md = modular_decomposition(g)
    elif not md_reconstructs(md, g):
        raise SolverInputError("decomposition does not rebuild the input graph")
    return md


def wvi_mw(
    g: WeightedGraph,
    md: MDTree | None = None,
    *,
    unary_cap: int = DEFAULT_UNARY_CAP,
) -> Solution:
    """Optimal weighted vertex integrity via the decomposition tables.

    Minimizes table-value-plus-bound over all bounds (smallest bound wins
    ties), rebuilds the witness set top-down from the recorded splits,
    drops redundant vertices, and re-scores it directly.
    """
    if g.n == 0:
        return evaluate(g, ())
    md = _checked_tree(g, md, unary_cap)
    nodes = _flatten(md, g)

    best_obj: float = inf
    best_bound = 0
    for bound in range(1, g.W + 1):
        value = _mu_pass(nodes, bound, None) + bound
        if value < best_obj:
            best_obj = value
            best_bound = bound

    choices: list[int] = [0] * len(nodes)
    _mu_pass(nodes, best_bound, choices)

    deleted: set[int] = set()

    def rebuild(idx: int) -> None:
        node = nodes[idx]
        if node.is_leaf:
            return
        full_mask = choices[idx]
        for i, child in enumerate(node.children):
            if full_mask >> i & 1:
                deleted.update(nodes[child].subtree_vertices)
        for members, comp_weight in _components_of(node, full_mask):
            if len(members) == 1 and comp_weight > best_bound:
                rebuild(node.children[members[0]])

    rebuild(len(nodes) - 1)
    certificate = strip_redundant(g, deleted)
    sol = evaluate(g, certificate)
    if sol.objective != best_obj:
        raise AssertionError(
            f"certificate scores {sol.objective}, tables promised {best_obj}"
        )
    return sol
