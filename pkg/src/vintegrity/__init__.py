"""Exact computation of unweighted and weighted vertex integrity.

The package bundles an exponential-time oracle, four parameterized exact
solvers (target-value branching, twin-class enumeration with or without a
twin cover, modular-decomposition tables, cluster-deletion-set guessing),
a dynamic program over labeled-graph construction expressions, and the
instance generators used to stress them all.
"""

from .branching import wvi_decide_branching, wvi_optimize_branching
from .caps import (
    DEFAULT_CVD_CAP,
    DEFAULT_ND_CAP,
    DEFAULT_ORACLE_CAP,
    DEFAULT_UNARY_CAP,
)
from .cvd import (
    ClusterType,
    NiceInstance,
    component_types,
    solve_subvicvd,
    vi_cvd,
)
from .cw import CwState, cw_join, cw_leaf, cw_relabel, cw_union, reachable_states, wvi_cw
from .errors import (
    ExpressionFormatError,
    GraphFormatError,
    SizeCapError,
    SolverInputError,
)
from .expressions import (
    CExpression,
    Create,
    EvaluatedExpression,
    Join,
    Relabel,
    Union2,
    clique_expression,
    eval_c_expression,
    format_expression,
    label_count,
    parse_expression,
    path_expression,
    star_expression,
)
from .graphs import (
    Solution,
    TwinPartition,
    WeightedGraph,
    are_twins,
    connected_components,
    evaluate,
    is_redundant,
    is_simplicial,
    peel_universal,
    simplicial_vertices,
    strip_redundant,
    twin_classes,
)
from .graphio import dump, dumps, load, loads
from .mw import mu_profile, mw_node_transition, wvi_mw
from .oracle import (
    FeasibilityConstraint,
    coc_exact,
    connected_safe_set_exact,
    feasible_vi_exact,
    line_integrity_exact,
    vi_exact,
    wvi_exact,
)
from .params import (
    MDLeaf,
    MDNode,
    cluster_vertex_deletion,
    format_md,
    md_reconstructs,
    md_width,
    modular_decomposition,
    neighborhood_diversity,
    parse_md,
    twin_cover,
    verify_cvd_set,
    verify_twin_cover,
)
from .quotient import wvi_nd, wvi_tc
from .reductions import (
    ReductionInstance,
    gen_binpacking_to_line_integrity,
    gen_binpacking_to_unary_wvi,
    gen_coc_to_vi,
    gen_partition_to_subdivided_star,
    gen_vc_to_planar_bipartite,
    line_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
