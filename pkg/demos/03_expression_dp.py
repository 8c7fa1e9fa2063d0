"""Labeled-graph expressions and the dynamic program over them.

    python demos/03_expression_dp.py

Expressions are inputs, never computed: this demo builds them with the
stock constructors, round-trips the text format, inspects the DP's state
sets, and solves. Ready-made expression files live in demos/expressions/.
"""

from vintegrity import (
    clique_expression,
    eval_c_expression,
    format_expression,
    parse_expression,
    path_expression,
    reachable_states,
    star_expression,
    wvi_cw,
    wvi_exact,
)
from vintegrity.expressions import Join, Relabel, Union2

# The text format: leaves o<i>, relabel r<i>,<j>(...), join e<i>,<j>(...),
# union u(...,...).
text = "e1,2(u(o1,o2))"
edge = parse_expression(text)
print("parsed:", text, "->", eval_c_expression(edge).graph.edges)

# Stock families: paths need 3 labels, cliques 2.
p5 = path_expression(5)
print("path expression:", format_expression(p5))
print("  builds edges:", eval_c_expression(p5).graph.edges)

# A cograph: join a triangle with a two-vertex path, all via label 1/2.
cograph = Relabel(2, 1, Join(1, 2, Union2(clique_expression(3), Relabel(1, 2, clique_expression(2)))))
print("cograph edges:", eval_c_expression(cograph).graph.edges)

# The DP carries, per node, the set of reachable (component-weight,
# component-max) summaries over every deletion set of that node's graph.
states = reachable_states(p5)
for node, state_set in states[-3:]:
    print(f"{type(node).__name__:8s} node: {len(state_set)} reachable states")

# Solving reads the best summary off the root and rebuilds the deletion set.
for name, expr in [
    ("P5", p5),
    ("K4", clique_expression(4)),
    ("star-5", star_expression(5)),
    ("cograph", cograph),
]:
    g = eval_c_expression(expr).graph
    sol = wvi_cw(expr)
    assert sol.objective == wvi_exact(g).objective
    print(f"{name}: optimum {sol.objective}, deleting {sorted(sol.deleted)}")

# Weights ride on the leaves (left-to-right order).
weighted = wvi_cw(edge, [5, 7])
print("K2 with weights (5, 7):", weighted.objective)
