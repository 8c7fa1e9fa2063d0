"""Shared fixtures: tiny named graphs, random generators, and an
independent brute-force scorer used as the oracle's oracle."""

from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from vintegrity import WeightedGraph, connected_components


def path(n: int, weights=None) -> WeightedGraph:
    return WeightedGraph.build(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle(n: int, weights=None) -> WeightedGraph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return WeightedGraph.build(n, edges, weights)


def complete(n: int, weights=None) -> WeightedGraph:
    return WeightedGraph.build(n, combinations(range(n), 2), weights)


def star(leaves: int, weights=None) -> WeightedGraph:
    return WeightedGraph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)], weights)


def empty(n: int, weights=None) -> WeightedGraph:
    return WeightedGraph.build(n, [], weights)


def brute_force_wvi(g: WeightedGraph) -> tuple[int, frozenset[int]]:
    """Fully independent scorer: dict adjacency, set BFS, every subset.

    Deliberately shares no code with the package's bitmask enumeration.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    def heaviest_component(removed: frozenset[int]) -> int:
        seen: set[int] = set(removed)
        worst = 0
        for start in range(g.n):
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            total = 0
            while stack:
                x = stack.pop()
                total += g.weight[x]
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            worst = max(worst, total)
        return worst

    best = None
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            removed = frozenset(combo)
            obj = sum(g.weight[v] for v in removed) + heaviest_component(removed)
            key = (obj, tuple(sorted(removed)))
            if best is None or key < best:
                best = key
    return best[0], frozenset(best[1])


def random_graph(
    rng: random.Random, n: int, density: float, max_weight: int = 1
) -> WeightedGraph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density
    ]
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    return WeightedGraph.build(n, edges, weights)


def random_connected_graph(
    rng: random.Random, n: int, density: float, max_weight: int = 1
) -> WeightedGraph:
    while True:
        g = random_graph(rng, n, density, max_weight)
        if len(connected_components(g)) <= 1:
            return g


@st.composite
def weighted_graphs(draw, max_n: int = 8, max_weight: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    weights = draw(
        st.lists(
            st.integers(min_value=1, max_value=max_weight),
            min_size=n,
            max_size=n,
        )
    )
    return WeightedGraph.build(n, picks, weights)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
