"""Hardness-reduction instance generators, oracle-checked at desk scale.

    python demos/04_hardness_instances.py

Every generator pairs a source problem with a graph whose optimum answers
it. At these sizes the exhaustive oracles can confirm the equivalence.
"""

from vintegrity import (
    WeightedGraph,
    coc_exact,
    gen_binpacking_to_unary_wvi,
    gen_coc_to_vi,
    gen_partition_to_subdivided_star,
    line_graph,
    line_integrity_exact,
    vi_exact,
    wvi_exact,
)

# --- Partition -> weighted integrity on a subdivided star ------------------
items = (1, 1, 2)
inst = gen_partition_to_subdivided_star(items)
print(f"partition {items}: {inst.graph.n} vertices, budget {inst.budget}")
print("  weights:", inst.graph.weight)
print("  roles:", {v: r for v, r in sorted(inst.vertex_roles.items())})
answer = wvi_exact(inst.graph).objective
print(f"  optimum {answer} <= budget? {answer <= inst.budget}"
      f"  (and indeed 1+1+2 splits into 2+2)")

# --- Bin packing -> unary-weighted integrity --------------------------------
yes = gen_binpacking_to_unary_wvi(2, (12, 12))
print(f"\nbin packing (12,12) into 2 bins: budget {yes.budget}")
print("  source:", yes.source)
print("  yes-instance?", wvi_exact(yes.graph).objective <= yes.budget)

no = gen_binpacking_to_unary_wvi(2, (9, 9, 6))
print(f"bin packing (9,9,6) into 2 bins: budget {no.budget}")
print("  yes-instance?", wvi_exact(no.graph).objective <= no.budget)

# --- Component order connectivity -> unweighted integrity -------------------
h = WeightedGraph.build(3, [(0, 1), (1, 2), (0, 2)])  # K3
inst = gen_coc_to_vi(h, limit=1, budget=1)
src = coc_exact(h, 1)[0] <= 1
tgt = vi_exact(inst.graph).objective <= inst.budget
print(f"\ncoc(K3, limit 1) within 1 deletion? {src}; wrapped instance yes? {tgt}")

# --- Line integrity and the line graph --------------------------------------
claw = WeightedGraph.build(4, [(0, 1), (0, 2), (0, 3)])
k, removed = line_integrity_exact(claw)
print(f"\nline integrity of the claw: {k} (removing {sorted(removed)})")
print("  equals vertex integrity of its line graph:",
      vi_exact(line_graph(claw)).objective)
