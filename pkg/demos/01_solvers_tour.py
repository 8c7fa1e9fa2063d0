"""A tour of every exact solver on the same handful of graphs.

Run me from the repository root:

    python demos/01_solvers_tour.py

Each solver attacks the problem from a different angle; on any input they
all land on the same optimum, which is the package's core promise.
"""

from vintegrity import (
    WeightedGraph,
    cluster_vertex_deletion,
    evaluate,
    modular_decomposition,
    twin_cover,
    vi_cvd,
    wvi_exact,
    wvi_mw,
    wvi_nd,
    wvi_optimize_branching,
    wvi_tc,
)

# ---------------------------------------------------------------------------
# The cast: a path, a cycle, a weighted star, and a clique with a pendant.

path5 = WeightedGraph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
cycle6 = WeightedGraph.build(6, [(i, (i + 1) % 6) for i in range(6)])
heavy_star = WeightedGraph.build(
    5, [(0, i) for i in range(1, 5)], [3, 1, 1, 1, 1]
)
lollipop = WeightedGraph.build(
    5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]
)

for name, g in [
    ("P5", path5),
    ("C6", cycle6),
    ("star, heavy center", heavy_star),
    ("triangle with a tail", lollipop),
]:
    print(f"== {name}  (n={g.n}, total weight {g.W})")

    # Ground truth by exhaustive enumeration.
    best = wvi_exact(g)
    print(f"   oracle:      {best.objective}  deleting {sorted(best.deleted)}")

    # Branch on overweight chunks until the target value works.
    print(f"   branching:   {wvi_optimize_branching(g).objective}")

    # Enumerate unions of twin classes.
    print(f"   twin enum:   {wvi_nd(g).objective}")

    # Same, but contract twin cliques outside a cover first.
    cover = next(
        c for k in range(g.n + 1) if (c := twin_cover(g, k)) is not None
    )
    print(f"   twin cover:  {wvi_tc(g, cover).objective}  (cover {sorted(cover)})")

    # Dynamic programming over the modular decomposition.
    md = modular_decomposition(g)
    print(f"   modular DP:  {wvi_mw(g, md).objective}")

    # The unweighted pipeline needs unit weights and a cluster deletion set.
    unit = g.unit_view()
    d = next(
        s for k in range(unit.n + 1)
        if (s := cluster_vertex_deletion(unit, k)) is not None
    )
    print(f"   cvd (unit):  {vi_cvd(unit, d).objective}  (deletion set {sorted(d)})")

    # Certificates are honest: re-score them from scratch.
    again = evaluate(g, best.deleted)
    assert again.objective == best.objective
    print(f"   certificate re-scored: {again.objective}")
    print()
