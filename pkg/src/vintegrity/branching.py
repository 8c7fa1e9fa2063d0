"""Bounded-depth branching solver parameterized by the target value.

The rule: while some surviving component is too heavy for the remaining
slack, grow a minimal connected chunk of it that already exceeds the slack;
any acceptable deletion set must hit that chunk, so branch on its vertices.
Each branch spends at least one unit of weight, which bounds the depth by
the target.
"""

from __future__ import annotations

from collections import deque

from .graphs import Solution, WeightedGraph, evaluate, _mask_weight, component_masks


def _grow_overweight_chunk(
    g: WeightedGraph, comp_mask: int, slack: int
) -> list[int]:
    """BFS from the smallest vertex until the collected weight exceeds slack."""
    start_bit = comp_mask & -comp_mask
    start = start_bit.bit_length() - 1
    chunk = [start]
    total = g.weight[start]
    seen = 1 << start
    queue = deque([start])
    while total <= slack:
        v = queue.popleft()
        for u in g.adjacency[v]:
            bit = 1 << u
            if comp_mask & bit and not seen & bit:
                seen |= bit
                queue.append(u)
                chunk.append(u)
                total += g.weight[u]
                if total > slack:
                    return chunk
    return chunk


def wvi_decide_branching(g: WeightedGraph, k: int) -> Solution | None:
    """Some deletion set of objective <= k, or None when none exists."""
    if k < 0:
        raise ValueError("target must be non-negative")
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    # Different branch orders reach the same partial set; remembering the
    # failures keeps rejecting decides (k just under the optimum) polynomial
    # in the number of distinct reachable sets instead of orderings.
    failed: set[int] = set()

    def search(deleted_mask: int, deleted_weight: int) -> frozenset[int] | None:
        slack = k - deleted_weight
        if slack < 0 or deleted_mask in failed:
            return None
        heavy = None
        for comp in component_masks(adj, full & ~deleted_mask):
            if _mask_weight(comp, g.weight) > slack:
                heavy = comp
                break
        if heavy is None:
            out = []
            m = deleted_mask
            while m:
                low = m & -m
                out.append(low.bit_length() - 1)
                m ^= low
            return frozenset(out)
        for v in _grow_overweight_chunk(g, heavy, slack):
            found = search(deleted_mask | (1 << v), deleted_weight + g.weight[v])
            if found is not None:
                return found
        failed.add(deleted_mask)
        return None

    certificate = search(0, 0)
    if certificate is None:
        return None
    sol = evaluate(g, certificate)
    if sol.objective > k:
        raise AssertionError(
            f"branching accepted a set of objective {sol.objective} > {k}"
        )
    return sol


def wvi_optimize_branching(g: WeightedGraph) -> Solution:
    """Smallest achievable objective, by raising the target until it works."""
    if g.n == 0:
        return evaluate(g, ())
    k = max(1, max(g.weight))
    while True:
        sol = wvi_decide_branching(g, k)
        if sol is not None:
            return sol
        k += 1
