"""Structural parameters and decompositions consumed by the solvers.

Covers neighborhood diversity, twin covers, cluster deletion sets, and
modular decompositions. Clique-width expressions live in
:mod:`vintegrity.expressions`; they are inputs to this package, never
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ExpressionFormatError, SolverInputError
from .graphs import (
    TwinPartition,
    WeightedGraph,
    connected_components,
    twin_classes,
)


def neighborhood_diversity(g: WeightedGraph) -> tuple[int, TwinPartition]:
    """Number of twin classes, together with the partition itself."""
    partition = twin_classes(g)
    return len(partition.classes), partition


# ---------------------------------------------------------------------------
# Cluster vertex deletion


def is_cluster_graph_after(g: WeightedGraph, removed: Iterable[int]) -> bool:
    """True when g minus ``removed`` is a disjoint union of cliques."""
    for comp in connected_components(g, removed):
        size = len(comp)
        inside = sum(1 for u, v in g.edges if u in comp and v in comp)
        if inside != size * (size - 1) // 2:
            return False
    return True


def verify_cvd_set(g: WeightedGraph, d: Iterable[int]) -> frozenset[int]:
    """Validate a cluster vertex deletion set, returning it as a frozenset."""
    ds = frozenset(d)
    for v in ds:
        if not 0 <= v < g.n:
            raise SolverInputError(f"vertex {v} outside 0..{g.n - 1}")
    if not is_cluster_graph_after(g, ds):
        raise SolverInputError("removal does not leave a disjoint union of cliques")
    return ds


def _find_induced_p3(g: WeightedGraph, alive: frozenset[int]) -> tuple[int, int, int] | None:
    """Smallest induced path u-v-w (u < w, v the center) among live vertices."""
    live = sorted(alive)
    for u in live:
        for v in live:
            if v == u or not g.has_edge(u, v):
                continue
            for w in live:
                if w <= u or w == v:
                    continue
                if g.has_edge(v, w) and not g.has_edge(u, w):
                    return u, v, w
    return None


def cluster_vertex_deletion(g: WeightedGraph, k: int) -> frozenset[int] | None:
    """Some deletion set of size <= k leaving only cliques, or None.

    Branches on the three vertices of the smallest induced P3; any cluster
    deletion set must contain one of them.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")

    def search(removed: frozenset[int], budget: int) -> frozenset[int] | None:
        alive = frozenset(range(g.n)) - removed
        p3 = _find_induced_p3(g, alive)
        if p3 is None:
            return removed
        if budget == 0:
            return None
        for x in p3:
            found = search(removed | {x}, budget - 1)
            if found is not None:
                return found
        return None

    return search(frozenset(), k)


# ---------------------------------------------------------------------------
# Twin cover


def verify_twin_cover(g: WeightedGraph, cover: Iterable[int]) -> frozenset[int]:
    """Validate that every component outside the cover is a twin set of g."""
    cov = frozenset(cover)
    for v in cov:
        if not 0 <= v < g.n:
            raise SolverInputError(f"vertex {v} outside 0..{g.n - 1}")
    class_of = twin_classes(g).class_of
    for comp in connected_components(g, cov):
        if len({class_of[v] for v in comp}) > 1:
            raise SolverInputError(
                f"component {sorted(comp)} is not a set of twins in the input graph"
            )
    return cov


def twin_cover(g: WeightedGraph, k: int) -> frozenset[int] | None:
    """Some cover of size <= k whose removal leaves only twin cliques, or None.

    Branches on the smallest edge whose endpoints are not twins; a twin
    cover must contain one endpoint of every such edge, and once none is
    left every surviving component sits inside one twin class.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    class_of = twin_classes(g).class_of

    def first_violation(removed: frozenset[int]) -> tuple[int, int] | None:
        for u, v in g.edges:
            if u in removed or v in removed:
                continue
            if class_of[u] != class_of[v]:
                return u, v
        return None

    def search(removed: frozenset[int], budget: int) -> frozenset[int] | None:
        edge = first_violation(removed)
        if edge is None:
            return removed
        if budget == 0:
            return None
        for x in edge:
            found = search(removed | {x}, budget - 1)
            if found is not None:
                return found
        return None

    return search(frozenset(), k)


# ---------------------------------------------------------------------------
# Modular decomposition


@dataclass(frozen=True)
class MDLeaf:
    """One vertex of the original graph."""

    vertex: int


@dataclass(frozen=True)
class MDNode:
    """Inner node: a quotient graph on the children, given as index pairs."""

    children: tuple["MDTree", ...]
    quotient_edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        c = len(self.children)
        if c < 2:
            raise ValueError("inner node needs at least 2 children")
        for i, j in self.quotient_edges:
            if not 0 <= i < j < c:
                raise ValueError(f"bad quotient edge ({i}, {j}) for {c} children")


MDTree = Union[MDLeaf, MDNode]


def md_vertices(tree: MDTree) -> frozenset[int]:
    if isinstance(tree, MDLeaf):
        return frozenset((tree.vertex,))
    out: set[int] = set()
    for child in tree.children:
        out |= md_vertices(child)
    return frozenset(out)


def md_width(tree: MDTree) -> int:
    if isinstance(tree, MDLeaf):
        return 0
    return max(len(tree.children), *(md_width(c) for c in tree.children))


def md_evaluate(tree: MDTree) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    """Rebuild (vertices, edges) by bottom-up substitution."""
    if isinstance(tree, MDLeaf):
        return frozenset((tree.vertex,)), frozenset()
    parts = [md_evaluate(c) for c in tree.children]
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for vs, es in parts:
        if vertices & vs:
            raise SolverInputError("decomposition children overlap")
        vertices |= vs
        edges |= es
    for i, j in tree.quotient_edges:
        for u in parts[i][0]:
            for v in parts[j][0]:
                edges.add((u, v) if u < v else (v, u))
    return frozenset(vertices), frozenset(edges)


def md_reconstructs(tree: MDTree, g: WeightedGraph) -> bool:
    """Exact edge-set equality against ``g`` under the identity vertex map."""
    vertices, edges = md_evaluate(tree)
    return vertices == frozenset(range(g.n)) and edges == frozenset(g.edges)


def _closure(g: WeightedGraph, universe: tuple[int, ...], seed: set[int]) -> set[int]:
    """Minimal module of g[universe] containing ``seed``.

    A splitter (a vertex adjacent to part of the set) is forced into any
    module containing the set, so repeatedly absorbing splitters converges
    to the unique minimal module.
    """
    module = set(seed)
    masks = g.adjacency_masks
    changed = True
    while changed:
        changed = False
        mod_mask = 0
        for v in module:
            mod_mask |= 1 << v
        for x in universe:
            if x in module:
                continue
            inter = masks[x] & mod_mask
            if inter and inter != mod_mask:
                module.add(x)
                changed = True
    return module


def _binarize(children: list[MDTree], series: bool) -> MDTree:
    """Left-deep binary fold of a degenerate (series/parallel) node."""
    edge = ((0, 1),) if series else ()
    acc = children[0]
    for child in children[1:]:
        acc = MDNode(children=(acc, child), quotient_edges=edge)
    return acc


def _decompose(g: WeightedGraph, verts: tuple[int, ...]) -> MDTree:
    if len(verts) == 1:
        return MDLeaf(verts[0])
    sub, mapping = g.induced(verts)
    comps = connected_components(sub)
    if len(comps) > 1:
        children = [
            _decompose(g, tuple(mapping[v] for v in sorted(comp))) for comp in comps
        ]
        return _binarize(children, series=False)
    co_edges = [
        (u, v)
        for u in range(sub.n)
        for v in range(u + 1, sub.n)
        if not sub.has_edge(u, v)
    ]
    co = WeightedGraph.build(sub.n, co_edges)
    co_comps = connected_components(co)
    if len(co_comps) > 1:
        children = [
            _decompose(g, tuple(mapping[v] for v in sorted(comp))) for comp in co_comps
        ]
        return _binarize(children, series=True)

    # Prime: both g[verts] and its complement are connected. The maximal
    # proper modules partition the vertex set; u and v share one exactly
    # when the minimal module containing both is proper.
    unassigned = list(verts)
    children_sets: list[list[int]] = []
    while unassigned:
        u = unassigned[0]
        block = {u}
        for v in unassigned[1:]:
            if len(_closure(g, verts, {u, v})) < len(verts):
                block.add(v)
        children_sets.append(sorted(block))
        unassigned = [v for v in unassigned if v not in block]
    children = [_decompose(g, tuple(block)) for block in children_sets]
    reps = [block[0] for block in children_sets]
    quotient = tuple(
        (i, j)
        for i in range(len(reps))
        for j in range(i + 1, len(reps))
        if g.has_edge(reps[i], reps[j])
    )
    return MDNode(children=tuple(children), quotient_edges=quotient)


def modular_decomposition(g: WeightedGraph) -> MDTree:
    """A minimum-width modular decomposition that rebuilds g exactly.

    Degenerate (union/join) layers are folded into binary nodes, so the
    width is 2 unless a prime quotient forces more.
    """
    if g.n < 1:
        raise ValueError("modular decomposition needs at least one vertex")
    return _decompose(g, tuple(range(g.n)))


# ---------------------------------------------------------------------------
# Decomposition text format: leaves `v<id>`, inner nodes
# `m[<i>-<j>,...](child, child, ...)` with edges on 0-based child positions.


def format_md(tree: MDTree) -> str:
    if isinstance(tree, MDLeaf):
        return f"v{tree.vertex}"
    edges = ",".join(f"{i}-{j}" for i, j in tree.quotient_edges)
    kids = ",".join(format_md(c) for c in tree.children)
    return f"m[{edges}]({kids})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ExpressionFormatError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExpressionFormatError("expected an integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise ExpressionFormatError("trailing input", self.pos)


def parse_md(text: str) -> MDTree:
    scanner = _Scanner(text)
    tree = _parse_md_node(scanner)
    scanner.done()
    return tree


def _parse_md_node(s: _Scanner) -> MDTree:
    ch = s.peek()
    if ch == "v":
        s.expect("v")
        return MDLeaf(s.integer())
    if ch != "m":
        raise ExpressionFormatError("expected 'v' or 'm'", s.pos)
    s.expect("m")
    s.expect("[")
    edges = []
    if s.peek() != "]":
        while True:
            i = s.integer()
            s.expect("-")
            j = s.integer()
            edges.append((i, j) if i < j else (j, i))
            if s.peek() != ",":
                break
            s.expect(",")
    s.expect("]")
    s.expect("(")
    children = [_parse_md_node(s)]
    while s.peek() == ",":
        s.expect(",")
        children.append(_parse_md_node(s))
    s.expect(")")
    at = s.pos
    try:
        return MDNode(children=tuple(children), quotient_edges=tuple(sorted(set(edges))))
    except ValueError as exc:
        raise ExpressionFormatError(str(exc), at) from None
