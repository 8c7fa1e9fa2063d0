"""Structural parameters: twins, covers, deletion sets, decompositions.

    python demos/02_structural_parameters.py

These are the handles the parameterized solvers grab; each one comes with
a verifier, and the solvers re-verify whatever you hand them.
"""

from vintegrity import (
    WeightedGraph,
    cluster_vertex_deletion,
    format_md,
    md_reconstructs,
    md_width,
    modular_decomposition,
    neighborhood_diversity,
    peel_universal,
    strip_redundant,
    twin_classes,
    twin_cover,
)

# A cocktail-party-ish graph: two twin pairs joined completely, plus a tail.
g = WeightedGraph.build(
    6,
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
)
print("graph:", g.edges)

# Twin classes: vertices whose neighborhoods agree outside the pair.
part = twin_classes(g)
print("twin classes:", [sorted(c) for c in part.classes])
nd, _ = neighborhood_diversity(g)
print("neighborhood diversity:", nd)

# A twin cover leaves only twin cliques behind; found by branching on
# edges whose endpoints are not twins.
for budget in range(g.n + 1):
    cover = twin_cover(g, budget)
    if cover is not None:
        print(f"twin cover within {budget}: {sorted(cover)}")
        break

# A cluster deletion set leaves a disjoint union of cliques; found by
# branching on induced 3-vertex paths.
for budget in range(g.n + 1):
    d = cluster_vertex_deletion(g, budget)
    if d is not None:
        print(f"cluster deletion set within {budget}: {sorted(d)}")
        break

# The modular decomposition rebuilds the graph by substitution. Degenerate
# layers are binary, so the width is 2 unless a prime quotient forces more.
md = modular_decomposition(g)
print("decomposition width:", md_width(md))
print("decomposition text:", format_md(md))
assert md_reconstructs(md, g)

# Universal vertices peel off: the optimum drops by exactly their weight.
k4 = WeightedGraph.build(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
peeled, offset = peel_universal(k4)
print(f"K4 peels to {peeled.n} vertex, offset {offset}")

# Redundant vertices (touching at most one surviving component) never help;
# stripping them is how certificates stay small.
print("strip {0, 1} on the graph above:", sorted(strip_redundant(g, {0, 1})))
