"""Command-line front end.

Subcommands: ``solve`` runs any of the exact algorithms on a graph file,
``verify`` checks a certificate against a target value, ``params`` fronts
the structural-parameter computations, and ``gen`` writes reduction
instances (graph file plus a JSON sidecar with budget, roles, and source).

Exit codes: 0 success (for ``verify``: the certificate is good), 1 a failed
verification, 2 malformed input, 3 a violated solver precondition, 4 a size
cap. Reports go to stdout and are deterministic; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import branching, cvd, cw, mw, oracle, quotient, reductions
from .errors import (
    ExpressionFormatError,
    GraphFormatError,
    SizeCapError,
    SolverInputError,
)
from .expressions import eval_c_expression, parse_expression
from .graphio import dump, dumps, load, load_vertex_set
from .graphs import Solution, WeightedGraph, connected_components, evaluate
from .params import (
    cluster_vertex_deletion,
    format_md,
    modular_decomposition,
    neighborhood_diversity,
    parse_md,
    twin_cover,
)

ALGORITHMS = ("oracle", "branch", "nd", "tc", "mw", "cvd", "cw")


def _print_solution(g: WeightedGraph, sol: Solution) -> None:
    print(f"objective {sol.objective}")
    print(f"deleted-weight {sol.deleted_weight}")
    print(f"max-component-weight {sol.max_component_weight}")
    ids = " ".join(str(v) for v in sol.sorted_deleted())
    print(f"deleted {ids}".rstrip())
    for comp in connected_components(g, sol.deleted):
        weight = sum(g.weight[v] for v in comp)
        members = " ".join(str(v) for v in sorted(comp))
        print(f"component {weight} {members}")


def _solve(args: argparse.Namespace) -> int:
    g = load(args.graph)
    started = time.perf_counter()
    if args.alg == "oracle":
        sol = oracle.wvi_exact(g)
    elif args.alg == "branch":
        sol = branching.wvi_optimize_branching(g)
    elif args.alg == "nd":
        sol = quotient.wvi_nd(g)
    elif args.alg == "tc":
        if args.twin_cover:
            cover = load_vertex_set(args.twin_cover)
        else:
            cover = _smallest_twin_cover(g)
        sol = quotient.wvi_tc(g, cover)
    elif args.alg == "mw":
        tree = parse_md(Path(args.mdtree).read_text()) if args.mdtree else None
        sol = mw.wvi_mw(g, tree)
    elif args.alg == "cvd":
        if args.cvd_set:
            d = load_vertex_set(args.cvd_set)
        else:
            d = _smallest_cvd_set(g, args.cvd_cap)
        sol = cvd.vi_cvd(g, d, k_cap=args.cvd_cap)
    else:
        if not args.expr:
            raise SolverInputError(
                "expressions are inputs, never computed: pass --expr"
            )
        expr = parse_expression(Path(args.expr).read_text())
        built = eval_c_expression(expr, g.weight).graph
        if built.edges != g.edges or built.n != g.n:
            raise SolverInputError("expression does not build the input graph")
        sol = cw.wvi_cw(expr, g.weight)
    elapsed = time.perf_counter() - started
    _print_solution(g, sol)
    print(f"wall-time {elapsed:.3f}s", file=sys.stderr)
    return 0


def _smallest_twin_cover(g: WeightedGraph) -> frozenset[int]:
    for k in range(g.n + 1):
        cover = twin_cover(g, k)
        if cover is not None:
            return cover
    raise AssertionError("the whole vertex set is always a twin cover")


def _smallest_cvd_set(g: WeightedGraph, cap: int) -> frozenset[int]:
    for k in range(min(g.n, cap) + 1):
        d = cluster_vertex_deletion(g, k)
        if d is not None:
            return d
    raise SizeCapError(f"no cluster deletion set within the cap {cap}")


def _verify(args: argparse.Namespace) -> int:
    g = load(args.graph)
    certificate = load_vertex_set(args.certificate)
    for v in certificate:
        if not 0 <= v < g.n:
            raise GraphFormatError(f"certificate vertex {v} outside 0..{g.n - 1}")
    sol = evaluate(g, certificate)
    _print_solution(g, sol)
    print(f"budget {args.k}")
    if sol.objective <= args.k:
        print("feasible yes")
        return 0
    print("feasible no")
    return 1


def _params(args: argparse.Namespace) -> int:
    g = load(args.graph)
    did = False
    if args.nd:
        nd, _ = neighborhood_diversity(g)
        print(nd)
        did = True
    if args.cvd_budget is not None:
        d = cluster_vertex_deletion(g, args.cvd_budget)
        print("none" if d is None else " ".join(str(v) for v in sorted(d)))
        did = True
    if args.tc_budget is not None:
        cover = twin_cover(g, args.tc_budget)
        print("none" if cover is None else " ".join(str(v) for v in sorted(cover)))
        did = True
    if args.mdtree:
        print(format_md(modular_decomposition(g)))
        did = True
    if not did:
        raise SolverInputError("pick at least one of --nd/--cvd-budget/--tc-budget/--mdtree")
    return 0


def _parse_items(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise GraphFormatError(f"bad item list {text!r}") from None


def _gen(args: argparse.Namespace) -> int:
    if args.family == "partition":
        inst = reductions.gen_partition_to_subdivided_star(_parse_items(args.items))
    elif args.family == "binpacking":
        inst = reductions.gen_binpacking_to_unary_wvi(
            args.bins,
            _parse_items(args.items),
            cliques=not args.independent,
            connect=not args.disconnected,
        )
    elif args.family == "line-binpacking":
        inst = reductions.gen_binpacking_to_line_integrity(
            args.bins, _parse_items(args.items)
        )
    elif args.family == "coc":
        inst = reductions.gen_coc_to_vi(load(args.source_graph), args.limit, args.p)
    else:
        inst = reductions.gen_vc_to_planar_bipartite(load(args.source_graph), args.p)

    out = Path(args.output)
    dump(inst.graph, out.with_suffix(".g"))
    sidecar = {
        "k": inst.budget,
        "source": inst.source,
        "roles": {str(v): role for v, role in sorted(inst.vertex_roles.items())},
    }
    out.with_suffix(".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out.with_suffix('.g')} and {out.with_suffix('.json')}")
    return 0


def _line_graph_cmd(args: argparse.Namespace) -> int:
    g = load(args.graph)
    sys.stdout.write(dumps(reductions.line_graph(g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vintegrity",
        description="Exact vertex-integrity solvers and instance generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute the optimum of a graph file")
    solve.add_argument("graph")
    solve.add_argument("--alg", choices=ALGORITHMS, required=True)
    solve.add_argument("--twin-cover", help="vertex-list file (alg tc)")
    solve.add_argument("--cvd-set", help="vertex-list file (alg cvd)")
    solve.add_argument("--expr", help="expression file (alg cw)")
    solve.add_argument("--mdtree", help="decomposition file (alg mw)")
    solve.add_argument("--cvd-cap", type=int, default=cvd.DEFAULT_CVD_CAP)
    solve.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="parallelism hint; solvers are deterministic regardless",
    )
    solve.set_defaults(func=_solve)

    verify = sub.add_parser("verify", help="check a certificate against a budget")
    verify.add_argument("graph")
    verify.add_argument("certificate")
    verify.add_argument("--k", type=int, required=True)
    verify.set_defaults(func=_verify)

    params = sub.add_parser("params", help="structural parameters of a graph file")
    params.add_argument("graph")
    params.add_argument("--nd", action="store_true")
    params.add_argument("--cvd-budget", type=int)
    params.add_argument("--tc-budget", type=int)
    params.add_argument("--mdtree", action="store_true")
    params.set_defaults(func=_params)

    gen = sub.add_parser("gen", help="write a reduction instance")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_part = gen_sub.add_parser("partition")
    g_part.add_argument("--items", required=True)
    g_bin = gen_sub.add_parser("binpacking")
    g_bin.add_argument("--bins", type=int, required=True)
    g_bin.add_argument("--items", required=True)
    g_bin.add_argument("--independent", action="store_true")
    g_bin.add_argument("--disconnected", action="store_true")
    g_lbin = gen_sub.add_parser("line-binpacking")
    g_lbin.add_argument("--bins", type=int, required=True)
    g_lbin.add_argument("--items", required=True)
    g_coc = gen_sub.add_parser("coc")
    g_coc.add_argument("--graph", dest="source_graph", required=True)
    g_coc.add_argument("--limit", type=int, required=True)
    g_coc.add_argument("--p", type=int, required=True)
    g_vc = gen_sub.add_parser("vc")
    g_vc.add_argument("--graph", dest="source_graph", required=True)
    g_vc.add_argument("--p", type=int, required=True)
    for sp in (g_part, g_bin, g_lbin, g_coc, g_vc):
        sp.add_argument("-o", "--output", required=True, help="output path prefix")
        sp.set_defaults(func=_gen)

    lg = sub.add_parser("line-graph", help="print the line graph of a graph file")
    lg.add_argument("graph")
    lg.set_defaults(func=_line_graph_cmd)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ExpressionFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        if isinstance(exc, SizeCapError):
            print(f"error: {exc}", file=sys.stderr)
            return 4
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
