"""Weighted graphs, deletion-set evaluation, and the twin/redundancy machinery.

Vertices are dense integers 0..n-1. Graphs are simple, undirected, and
immutable; every vertex carries a positive integer weight. All tie-breaks
in this package resolve to smallest-vertex-id-first so that every solver
is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

MAX_WEIGHT = 2**64 - 1


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive integer vertex weights.

    ``edges`` is the canonical edge list: each edge is ``(u, v)`` with
    ``u < v`` and the list is sorted. Use :meth:`build` to normalize raw
    edge input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weight: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.weight) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(self.weight)}")
        for w in self.weight:
            if not 1 <= w <= MAX_WEIGHT:
                raise ValueError(f"vertex weight {w} outside [1, 2^64-1]")
        if sum(self.weight) > MAX_WEIGHT:
            raise ValueError("total weight overflows 64 bits")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"parallel edge ({u}, {v})")
            seen.add((u, v))
        if self.edges != tuple(sorted(self.edges)):
            raise ValueError("edge list not in canonical sorted order")

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Iterable[int] | None = None,
    ) -> "WeightedGraph":
        """Normalize edge endpoints and default to unit weights."""
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            canon.append((u, v) if u < v else (v, u))
        w = tuple(weights) if weights is not None else (1,) * n
        return cls(n, tuple(sorted(canon)), w)

    @cached_property
    def W(self) -> int:
        """Total weight of all vertices."""
        return sum(self.weight)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor lists."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks (bit v = vertex v)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return bool(self.adjacency_masks[u] >> v & 1) if v < self.n else False

    def is_unit_weighted(self) -> bool:
        return all(w == 1 for w in self.weight)

    def unit_view(self) -> "WeightedGraph":
        """The same graph with every weight set to 1."""
        return WeightedGraph(self.n, self.edges, (1,) * self.n)

    def induced(self, vertices: Iterable[int]) -> tuple["WeightedGraph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` plus the new-id -> old-id map."""
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        weights = tuple(self.weight[v] for v in keep)
        return WeightedGraph.build(len(keep), edges, weights), tuple(keep)


@dataclass(frozen=True)
class Solution:
    """A deletion set together with the value it certifies.

    ``objective`` always equals ``deleted_weight + max_component_weight``,
    where the max over no components is 0.
    """

    deleted: frozenset[int]
    objective: int
    max_component_weight: int
    deleted_weight: int

    def __post_init__(self):
        if self.objective != self.deleted_weight + self.max_component_weight:
            raise ValueError("objective does not match its defining sum")

    def sorted_deleted(self) -> tuple[int, ...]:
        return tuple(sorted(self.deleted))


@dataclass(frozen=True)
class TwinPartition:
    """The unique partition of V into maximal twin classes."""

    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]


def _mask_weight(mask: int, weight: tuple[int, ...]) -> int:
    total = 0
    while mask:
        low = mask & -mask
        total += weight[low.bit_length() - 1]
        mask ^= low
    return total


def component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by the ``alive`` bitmask.

    Returned in order of smallest contained vertex.
    """
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                grown |= adj[low.bit_length() - 1]
                f ^= low
            frontier = grown & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_subset(g: WeightedGraph, s: Iterable[int]) -> frozenset[int]:
    out = frozenset(s)
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return out


def connected_components(
    g: WeightedGraph, removed: Iterable[int] = ()
) -> list[frozenset[int]]:
    """Connected components of ``g`` minus ``removed``.

    The components partition the surviving vertices and are listed by
    smallest contained vertex id. Removing everything yields ``[]``.
    """
    gone = _check_subset(g, removed)
    alive = ((1 << g.n) - 1) & ~_set_to_mask(gone)
    return [_mask_to_set(m) for m in component_masks(g.adjacency_masks, alive)]


def evaluate(g: WeightedGraph, s: Iterable[int]) -> Solution:
    """Score a deletion set: weight deleted plus heaviest surviving component."""
    deleted = _check_subset(g, s)
    alive = ((1 << g.n) - 1) & ~_set_to_mask(deleted)
    heaviest = 0
    for comp in component_masks(g.adjacency_masks, alive):
        heaviest = max(heaviest, _mask_weight(comp, g.weight))
    dw = sum(g.weight[v] for v in deleted)
    return Solution(
        deleted=deleted,
        objective=dw + heaviest,
        max_component_weight=heaviest,
        deleted_weight=dw,
    )


def twin_classes(g: WeightedGraph) -> TwinPartition:
    """Group vertices into maximal twin classes.

    Two vertices are twins when their neighborhoods agree outside the pair
    itself; the relation is an equivalence, realized here by merging groups
    that share an open or a closed neighborhood.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in range(g.n):
        open_key = g.adjacency_masks[v]
        closed_key = open_key | (1 << v)
        if open_key in open_groups:
            union(open_groups[open_key], v)
        else:
            open_groups[open_key] = v
        if closed_key in closed_groups:
            union(closed_groups[closed_key], v)
        else:
            closed_groups[closed_key] = v

    members: dict[int, list[int]] = {}
    for v in range(g.n):
        members.setdefault(find(v), []).append(v)
    classes = tuple(frozenset(members[root]) for root in sorted(members))
    class_of = [0] * g.n
    for idx, cls in enumerate(classes):
        for v in cls:
            class_of[v] = idx
    return TwinPartition(classes=classes, class_of=tuple(class_of))


def are_twins(g: WeightedGraph, u: int, v: int) -> bool:
    """Neighborhood equality outside the pair: N(u)-{v} == N(v)-{u}."""
    mu = g.adjacency_masks[u] & ~(1 << v)
    mv = g.adjacency_masks[v] & ~(1 << u)
    return mu == mv


def is_simplicial(g: WeightedGraph, v: int) -> bool:
    """True when the neighborhood of ``v`` induces a clique."""
    nbrs = g.adjacency[v]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            if not g.has_edge(a, b):
                return False
    return True


def simplicial_vertices(g: WeightedGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if is_simplicial(g, v))


def is_redundant(g: WeightedGraph, s: Iterable[int], v: int) -> bool:
    """True when at most one component of ``g - s`` contains a neighbor of ``v``."""
    deleted = _check_subset(g, s)
    if v not in deleted:
        raise ValueError(f"vertex {v} is not in the deletion set")
    alive = ((1 << g.n) - 1) & ~_set_to_mask(deleted)
    nbr_mask = g.adjacency_masks[v] & alive
    touched = 0
    for comp in component_masks(g.adjacency_masks, alive):
        if comp & nbr_mask:
            touched += 1
            if touched > 1:
                return False
    return True


def strip_redundant(g: WeightedGraph, s: Iterable[int]) -> frozenset[int]:
    """Drop redundant vertices from ``s`` one at a time until none remains.

    Components are recomputed after every single removal (a removal can make
    other vertices redundant or irredundant), and the smallest-id redundant
    vertex goes first. The objective never increases along the way.
    """
    current = set(_check_subset(g, s))
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    while True:
        alive = full & ~_set_to_mask(current)
        comps = component_masks(adj, alive)
        removed_one = False
        for v in sorted(current):
            nbr_mask = adj[v] & alive
            touched = 0
            for comp in comps:
                if comp & nbr_mask:
                    touched += 1
                    if touched > 1:
                        break
            if touched <= 1:
                current.remove(v)
                removed_one = True
                break
        if not removed_one:
            return frozenset(current)


def peel_universal(g: WeightedGraph) -> tuple[WeightedGraph, int]:
    """Remove universal vertices while any exists, summing their weights.

    The weighted vertex integrity of the input equals that of the peeled
    graph plus the returned offset. The smallest-id universal vertex is
    peeled first; a single remaining vertex is never peeled.
    """
    current = g
    offset = 0
    while current.n >= 2:
        universal = None
        for v in range(current.n):
            if current.degree(v) == current.n - 1:
                universal = v
                break
        if universal is None:
            break
        offset += current.weight[universal]
        current, _ = current.induced(v for v in range(current.n) if v != universal)
    return current, offset
