"""Instance generators for the hardness constructions, plus the line-graph
transform.

Each generator emits a graph, the matching budget, a provenance string, and
a role tag per vertex. Where a construction assumes its numbers are "large
enough", the generator scales by the smallest multiplier that makes the
assumption true and records it in the provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graphs import WeightedGraph, connected_components


@dataclass(frozen=True)
class ReductionInstance:
    graph: WeightedGraph
    budget: int
    source: str
    vertex_roles: dict[int, str]

    def __post_init__(self):
        if set(self.vertex_roles) != set(range(self.graph.n)):
            raise ValueError("role map must cover every vertex exactly")


def gen_coc_to_vi(h: WeightedGraph, limit: int, budget: int) -> ReductionInstance:
    """Component-order-connectivity instance -> unweighted vertex integrity.

    Wraps ``h`` with ``budget`` pendants per vertex and adds k+1 disjoint
    stars K_{1,k-budget-1}, where k = limit*budget + limit + budget. The
    produced instance is a yes at k exactly when ``h`` admits ``budget``
    deletions leaving components of at most ``limit`` vertices.
    """
    if limit < 1 or budget < 1:
        raise ValueError("limit and budget must be at least 1")
    k = limit * budget + limit + budget
    star_leaves = k - budget - 1
    if star_leaves < 1:
        raise ValueError("construction needs k - budget - 1 >= 1")

    edges: list[tuple[int, int]] = list(h.edges)
    roles: dict[int, str] = {v: f"h_{v}" for v in range(h.n)}
    nxt = h.n
    for v in range(h.n):
        for i in range(budget):
            edges.append((v, nxt))
            roles[nxt] = f"pendant_{v}_{i}"
            nxt += 1
    for s in range(k + 1):
        center = nxt
        roles[center] = f"star_center_{s}"
        nxt += 1
        for i in range(star_leaves):
            edges.append((center, nxt))
            roles[nxt] = f"star_leaf_{s}_{i}"
            nxt += 1
    graph = WeightedGraph.build(nxt, edges)
    return ReductionInstance(
        graph=graph,
        budget=k,
        source=f"coc(limit={limit}, budget={budget}) on {h.n} vertices",
        vertex_roles=roles,
    )


def _scaled(items: tuple[int, ...], threshold: int) -> tuple[tuple[int, ...], int]:
    """Smallest integer multiple making every item exceed ``threshold``."""
    smallest = min(items)
    factor = max(1, ceil((threshold + 1) / smallest))
    return tuple(a * factor for a in items), factor


def gen_binpacking_to_unary_wvi(
    bins: int,
    items: tuple[int, ...],
    *,
    cliques: bool = True,
    connect: bool = True,
) -> ReductionInstance:
    """Bin-packing instance -> weighted vertex integrity.

    Item vertices u_i (weight a_i - 1) connect to one slot vertex v_i^j per
    bin, slot vertices connect to their bin vertex w_j (weight 2B), and an
    isolated anchor x carries 3B. Slots of one item form a clique or an
    independent set; a universal weight-1 vertex makes the graph connected
    and raises the budget by one.
    """
    n = len(items)
    if n == 0 or bins < 1:
        raise ValueError("need at least one item and one bin")
    if any(a < 1 for a in items):
        raise ValueError("items must be positive")
    total = sum(items)
    if total % bins:
        raise ValueError(f"total {total} not divisible by {bins} bins")
    scaled, factor = _scaled(items, (bins - 1) * n + 1)
    cap = sum(scaled) // bins
    if max(scaled) > cap:
        raise ValueError("an item exceeds the bin capacity: no-instance by default")
    k = (bins - 1) * n + 3 * cap

    weights: list[int] = []
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    for i in range(n):
        roles[i] = f"u_{i + 1}"
        weights.append(scaled[i] - 1)

    def slot(i: int, j: int) -> int:
        return n + i * bins + j
    for i in range(n):
        for j in range(bins):
            roles[slot(i, j)] = f"v_{i + 1}^{j + 1}"
            weights.append(1)
    w_base = n + n * bins
    for j in range(bins):
        roles[w_base + j] = f"w_{j + 1}"
        weights.append(2 * cap)
    x = w_base + bins
    roles[x] = "x"
    weights.append(3 * cap)

    for i in range(n):
        for j in range(bins):
            edges.append((i, slot(i, j)))
            edges.append((slot(i, j), w_base + j))
        if cliques:
            for j in range(bins):
                for jj in range(j + 1, bins):
                    edges.append((slot(i, j), slot(i, jj)))
    count = x + 1
    if connect:
        uni = count
        roles[uni] = "universal"
        weights.append(1)
        for v in range(count):
            edges.append((v, uni))
        count += 1
        k += 1
    graph = WeightedGraph.build(count, edges, weights)
    return ReductionInstance(
        graph=graph,
        budget=k,
        source=(
            f"bin packing t={bins}, items={list(items)}, scaled x{factor}, "
            f"{'cliques' if cliques else 'independent'}, "
            f"{'connected' if connect else 'disconnected'}"
        ),
        vertex_roles=roles,
    )


def gen_partition_to_subdivided_star(items: tuple[int, ...]) -> ReductionInstance:
    """Partition instance -> weighted vertex integrity on a subdivided star.

    Center r (weight B+1), spokes u_i (weight a_i) with tips v_i (weight
    a_i*B), plus a spoke w (weight 1) with tip x (weight (B+1)^2); budget
    (B+1)(B+2). A yes exactly when some items sum to B.
    """
    if not items or any(a < 1 for a in items):
        raise ValueError("items must be positive")
    total = sum(items)
    if total % 2:
        raise ValueError("item total must be even")
    half = total // 2
    if max(items) > half:
        raise ValueError("an item exceeds half the total: no-instance by default")
    n = len(items)
    k = (half + 1) * (half + 2)

    weights = [half + 1]
    roles = {0: "r"}
    edges = []
    for i, a in enumerate(items):
        u = 1 + i
        v = 1 + n + i
        roles[u] = f"u_{i + 1}"
        roles[v] = f"v_{i + 1}"
        edges.append((0, u))
        edges.append((u, v))
    weights += [a for a in items]
    weights += [a * half for a in items]
    w = 1 + 2 * n
    x = w + 1
    roles[w] = "w"
    roles[x] = "x"
    weights += [1, (half + 1) ** 2]
    edges.append((0, w))
    edges.append((w, x))
    graph = WeightedGraph.build(x + 1, edges, weights)
    return ReductionInstance(
        graph=graph,
        budget=k,
        source=f"partition items={list(items)}, half={half}",
        vertex_roles=roles,
    )


def gen_vc_to_planar_bipartite(h: WeightedGraph, budget: int) -> ReductionInstance:
    """Vertex-cover instance on a connected cubic graph -> unweighted vertex
    integrity on a bipartite max-degree-4 graph.

    Subdivides every edge, hangs a (budget+2)-vertex tail on each original
    vertex, and anchors budget+4 spiders (subdivided claws with legs of
    budget+6 vertices) onto distinct subdivision vertices; budget' = 3*budget+10.
    """
    if h.n < 6:
        raise ValueError("source graph needs at least 6 vertices")
    if any(h.degree(v) != 3 for v in range(h.n)):
        raise ValueError("source graph must be cubic")
    if len(connected_components(h)) != 1:
        raise ValueError("source graph must be connected")
    if budget > h.n - 1:
        raise ValueError("cover budget must be at most n - 1")
    k = 3 * budget + 10

    edges: list[tuple[int, int]] = []
    roles = {v: f"h_{v}" for v in range(h.n)}
    nxt = h.n
    subdivision: list[int] = []
    for u, v in h.edges:
        edges.append((u, nxt))
        edges.append((v, nxt))
        roles[nxt] = f"sub_{u}_{v}"
        subdivision.append(nxt)
        nxt += 1
    for v in range(h.n):
        prev = v
        for i in range(budget + 2):
            edges.append((prev, nxt))
            roles[nxt] = f"tail_{v}_{i}"
            prev = nxt
            nxt += 1
    spiders = budget + 4
    leg = budget + 6
    for s in range(spiders):
        center = nxt
        roles[center] = f"spider_center_{s}"
        nxt += 1
        for arm in range(3):
            prev = center
            for i in range(leg):
                edges.append((prev, nxt))
                roles[nxt] = f"spider_leg_{s}_{arm}_{i}"
                prev = nxt
                nxt += 1
        edges.append((center, subdivision[s]))
    graph = WeightedGraph.build(nxt, edges)
    return ReductionInstance(
        graph=graph,
        budget=k,
        source=f"vertex cover budget={budget} on cubic {h.n}-vertex graph",
        vertex_roles=roles,
    )


def gen_binpacking_to_line_integrity(
    bins: int, items: tuple[int, ...]
) -> ReductionInstance:
    """Bin-packing instance -> line integrity (edge-deletion objective).

    Biclique between item vertices and bin vertices, a_i - 1 pendants per
    item vertex, 2B pendants per bin vertex, plus a star of 3B leaves tied
    to the last item vertex; budget (bins-1)*n + 3B + 1.
    """
    n = len(items)
    if n == 0 or bins < 1:
        raise ValueError("need at least one item and one bin")
    if any(a < 1 for a in items):
        raise ValueError("items must be positive")
    total = sum(items)
    if total % bins:
        raise ValueError(f"total {total} not divisible by {bins} bins")
    scaled, factor = _scaled(items, bins * n)
    cap = sum(scaled) // bins
    if max(scaled) > cap:
        raise ValueError("an item exceeds the bin capacity: no-instance by default")
    k = (bins - 1) * n + 3 * cap + 1

    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    for i in range(n):
        roles[i] = f"u_{i + 1}"
    for j in range(bins):
        roles[n + j] = f"v_{j + 1}"
    nxt = n + bins
    for i in range(n):
        for j in range(bins):
            edges.append((i, n + j))
    for i in range(n):
        for p in range(scaled[i] - 1):
            edges.append((i, nxt))
            roles[nxt] = f"u_pendant_{i + 1}_{p}"
            nxt += 1
    for j in range(bins):
        for p in range(2 * cap):
            edges.append((n + j, nxt))
            roles[nxt] = f"v_pendant_{j + 1}_{p}"
            nxt += 1
    w = nxt
    roles[w] = "w"
    nxt += 1
    for p in range(3 * cap):
        edges.append((w, nxt))
        roles[nxt] = f"w_leaf_{p}"
        nxt += 1
    edges.append((w, n - 1))
    graph = WeightedGraph.build(nxt, edges)
    return ReductionInstance(
        graph=graph,
        budget=k,
        source=f"bin packing t={bins}, items={list(items)}, scaled x{factor}, line variant",
        vertex_roles=roles,
    )


def line_graph(g: WeightedGraph) -> WeightedGraph:
    """Unit-weight line graph; vertex i is the i-th edge in sorted order."""
    if g.m == 0:
        raise ValueError("line graph needs at least one edge")
    edges = list(g.edges)
    out = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                out.append((i, j))
    return WeightedGraph.build(len(edges), out)
