"""``mixdim`` command line: solve, verify, family, bounds, reduce, export-lp.

Exit codes: 0 done and proven/verified, 1 set is not a generator,
2 parse or usage error, 3 invalid graph or family parameter, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .families import BadParameter, NotATree, build_family, family_mdim, family_note, parse_family
from .graph import ACYCLIC, GraphError, all_pairs_distances, girth
from .io import ParseError, RunReport, format_edge_list, graph_digest, read_edge_list, dumps
from .lp import export_ilp
from .metrics import EmptySet, Variant, structural_report, verify_generator
from .reduction import CnfError, build_reduction, parse_cnf
from .solver import BudgetExceeded, SolverConfig, lower_bound, solve, upper_bound_girth

EXIT_OK, EXIT_INVALID_SET, EXIT_PARSE, EXIT_GRAPH, EXIT_BUDGET = 0, 1, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _variants(name: str) -> list[Variant]:
    if name == "all":
        return [Variant.DIM, Variant.EDIM, Variant.MDIM]
    return [Variant(name)]


def _load(path: str):
    try:
        return read_edge_list(path)
    except ParseError as exc:
        raise _Fail(EXIT_PARSE, f"{path}: {exc}") from exc
    except GraphError as exc:
        raise _Fail(EXIT_GRAPH, f"{path}: {type(exc).__name__}: {exc}") from exc


def _emit(args, report: RunReport, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print("\n".join(lines))


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        max_vertices=args.max_vertices,
        canonical=args.canonical,
        parallel=args.parallel,
    )


def cmd_solve(args, argv) -> int:
    loaded = _load(args.graph)
    g = loaded.graph
    t = all_pairs_distances(g)
    cfg = _solver_config(args)
    results, stats, timing, lines = {}, {}, {}, []
    code = EXIT_OK
    for variant in _variants(args.variant):
        start = time.perf_counter()
        try:
            res = solve(g, variant, cfg, table=t)
        except BudgetExceeded as exc:
            res = exc.result
            code = EXIT_BUDGET
            lines.append(f"{variant.value}: budget exceeded ({exc}); best known {res.value}")
        timing[variant.value] = round(time.perf_counter() - start, 6)
        results[variant.value] = res.as_dict()
        stats[variant.value] = {"nodes_explored": res.nodes_explored}
        tag = "" if res.optimal else " (not proven optimal)"
        lines.append(f"{variant.value} = {res.value}{tag}  basis {list(res.basis)}  bounds {list(res.bounds_used)}")
    report = RunReport(argv, graph_digest(g), results, timing, stats)
    _emit(args, report, lines)
    return code


def _parse_set(text: str) -> list[int]:
    toks = [x for x in text.replace(" ", "").split(",") if x]
    if not toks:
        raise _Fail(EXIT_PARSE, "--set needs at least one vertex, e.g. --set 0,3")
    try:
        return [int(x) for x in toks]
    except ValueError:
        raise _Fail(EXIT_PARSE, f"--set must be comma-separated vertex indices, got {text!r}") from None


def cmd_verify(args, argv) -> int:
    S = _parse_set(args.set)
    loaded = _load(args.graph)
    g = loaded.graph
    t = all_pairs_distances(g)
    results, lines = {}, []
    code = EXIT_OK
    for variant in _variants(args.variant):
        try:
            cert = verify_generator(t, S, variant)
        except (EmptySet, GraphError) as exc:
            raise _Fail(EXIT_PARSE, f"--set: {exc}") from exc
        entry = {"set": list(cert.vertices), "valid": cert.valid, "failing_pair": None}
        if cert.valid:
            lines.append(f"{variant.value}: valid generator {list(cert.vertices)}")
        else:
            pair = [g.element_label(x) for x in cert.failing_pair]
            entry["failing_pair"] = pair
            lines.append(f"{variant.value}: not a generator; {pair[0]} and {pair[1]} are not distinguished")
            code = EXIT_INVALID_SET
        results[variant.value] = entry
    _emit(args, RunReport(argv, graph_digest(g), results), lines)
    return code


def cmd_family(args, argv) -> int:
    def tree_loader(path):
        lg = _load(path)
        return lg.graph.n, lg.graph.edges

    try:
        spec = parse_family(args.spec, tree_loader=tree_loader)
        value = family_mdim(spec)
        g = build_family(spec)
    except (BadParameter, NotATree) as exc:
        raise _Fail(EXIT_GRAPH, f"{args.spec}: {exc}") from exc
    results = {"family": args.spec, "mdim": value, "n": g.n, "m": g.m}
    note = family_note(spec)
    if note:
        results["note"] = note
    lines = [f"{args.spec}: mdim = {value}"]
    if note:
        lines.append(f"note: {note}")
    code = EXIT_OK
    if args.check:
        try:
            res = solve(g, Variant.MDIM, SolverConfig(canonical=True))
        except BudgetExceeded as exc:
            raise _Fail(EXIT_BUDGET, str(exc)) from exc
        results["solver"] = res.as_dict()
        lines.append(f"solver: {res.value}  basis {list(res.basis)}")
        if res.value != value:
            code = EXIT_INVALID_SET
    _emit(args, RunReport(argv, graph_digest(g), results), lines)
    return code


def cmd_bounds(args, argv) -> int:
    g = _load(args.graph).graph
    rep = structural_report(g)
    gb = upper_bound_girth(g)
    gr = girth(g)
    results = {
        "n": g.n,
        "m": g.m,
        "girth": None if gr is ACYCLIC else gr,
        "lower": lower_bound(g),
        "girth_upper": gb.value,
        "witness_cycle": None if gb.witness_cycle is None else list(gb.witness_cycle),
        "forced_vertices": list(rep.forced_vertices),
        "true_twin_classes": [list(c) for c in rep.true_twin_classes],
        "false_twin_classes": [list(c) for c in rep.false_twin_classes],
    }
    lines = [
        f"n = {g.n}, m = {g.m}, girth = {'acyclic' if gr is ACYCLIC else gr}",
        f"lower bound   {results['lower']}  (forced {list(rep.forced_vertices)})",
        f"girth bound   {gb.value}",
    ]
    _emit(args, RunReport(argv, graph_digest(g), results), lines)
    return EXIT_OK


def cmd_reduce(args, argv) -> int:
    try:
        text = Path(args.cnf).read_text()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, f"cannot read {args.cnf}: {exc.strerror}") from exc
    try:
        f = parse_cnf(text)
    except CnfError as exc:
        raise _Fail(EXIT_PARSE, f"{args.cnf}: {type(exc).__name__}: {exc}") from exc
    a = build_reduction(f)
    prefix = Path(args.out) if args.out else Path(args.cnf).with_suffix("")
    edges_path = prefix.with_name(prefix.name + ".edges")
    side_path = prefix.with_name(prefix.name + ".json")
    edges_path.write_text(format_edge_list(a.graph, f"MDIM instance from {Path(args.cnf).name}; r = {a.r}"))
    side_path.write_text(dumps(a.sidecar()))
    results = {
        "r": a.r,
        "n": a.graph.n,
        "m": a.graph.m,
        "edges_file": str(edges_path),
        "sidecar_file": str(side_path),
    }
    lines = [f"r = {a.r}", f"wrote {edges_path} ({a.graph.n} vertices, {a.graph.m} edges)", f"wrote {side_path}"]
    _emit(args, RunReport(argv, graph_digest(a.graph), results), lines)
    return EXIT_OK


def cmd_export_lp(args, argv) -> int:
    g = _load(args.graph).graph
    text = export_ilp(g, Variant(args.variant))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--canonical", action="store_true", help="return the lexicographically smallest basis")
    p.add_argument("--parallel", action="store_true", help="explore root branches on a thread pool")
    p.add_argument("--node-limit", type=int, default=10**7)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--max-vertices", type=int, default=64)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixdim", description="Mixed, edge and classical metric dimension of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact dimension with a basis")
    p.add_argument("graph")
    p.add_argument("--variant", choices=["dim", "edim", "mdim", "all"], default="mdim")
    _add_solver_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set")
    p.add_argument("graph")
    p.add_argument("--set", required=True)
    p.add_argument("--variant", choices=["dim", "edim", "mdim", "all"], default="mdim")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="closed-form value for a graph family")
    p.add_argument("spec", help="path:5, cycle:6, complete:5, kb:3,4, grid:3,4, tree:@file.edges")
    p.add_argument("--check", action="store_true", help="also run the exact solver")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bounds", help="structural lower bound and girth upper bound")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("reduce", help="build the MDIM instance of a 3-CNF formula")
    p.add_argument("cnf")
    p.add_argument("--out", help="output prefix; writes PREFIX.edges and PREFIX.json")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("export-lp", help="write the 0/1 program in LP format")
    p.add_argument("graph")
    p.add_argument("--variant", choices=["dim", "edim", "mdim"], default="mdim")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_lp)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, ["mixdim", *argv])
    except _Fail as exc:
        print(f"mixdim: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
