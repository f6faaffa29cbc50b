"""Command-line interface.

Subcommands: bound (single|multi|rate|rll), lp (solve|export),
exact (mis), codes (vt|tenengolts|verify), table (1a|1b|1c|1d),
fig (1|2), suite (invariants|oracles|duality|rll).

Exit codes: 0 success, 2 assertion or verification failure,
3 resource cap hit on a required computation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bnd
from . import codes, hypergraph, lp, reports, rll, search
from .errors import ConstructionError, ResourceLimitError


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _frac_line(name: str, value: Fraction) -> str:
    return f"{name} = {value.numerator}/{value.denominator} (~{float(value):.6g}, floor {math.floor(value)})"


def _cmd_bound(args) -> int:
    if args.kind == "single":
        value = bnd.single_deletion_bound(args.q, args.n)
        print(_frac_line(f"single_deletion_bound(q={args.q}, n={args.n})", value))
    elif args.kind == "multi":
        report = bnd.standard_bounds(args.q, args.s, args.n, max_strings=args.max_vertices)
        for name in sorted(report.entries):
            print(_frac_line(f"{name}(q={args.q}, s={args.s}, n={args.n})", report.entries[name]))
    elif args.kind == "rate":
        value = bnd.rate_bound(args.q, args.tau)
        print(f"rate_bound(q={args.q}, tau={args.tau}) = {value:.9g}")
    elif args.kind == "rll":
        value = rll.rll_bound(args.n, args.d)
        print(_frac_line(f"rll_bound(n={args.n}, d={args.d})", value))
    return 0


def _build_from_args(args) -> hypergraph.DeletionHypergraph:
    return hypergraph.build(args.q, args.s, args.n, max_size=args.max_vertices)


def _cmd_lp(args) -> int:
    if args.action == "export":
        hg = _build_from_args(args)
        if args.format == "mps":
            _emit(hypergraph.to_mps(hg, args.problem), args.output)
        else:
            _emit(hypergraph.incidence_json(hg), args.output)
        return 0
    if args.mps:
        problem = lp.read_mps(Path(args.mps).read_text())
        sol = lp.solve(problem, args.lp_mode)
    else:
        hg = _build_from_args(args)
        solver = (
            lp.solve_fractional_matching
            if args.problem == "matching"
            else lp.solve_fractional_transversal
        )
        sol = solver(hg, args.lp_mode)
    payload = {
        "status": sol.status,
        "value": sol.value,
        "floor": sol.floor() if sol.status == "optimal" else None,
        "exact": None if sol.exact is None else str(sol.exact),
        "certified_lower": None if sol.certified_lower is None else str(sol.certified_lower),
        "certified_upper": None if sol.certified_upper is None else str(sol.certified_upper),
    }
    print(json.dumps(payload, indent=2))
    if args.solution_out and sol.status == "optimal":
        kind = f"{args.problem}_weights"
        Path(args.solution_out).write_text(hypergraph.solution_json(sol.weights, kind=kind))
    return 0 if sol.status == "optimal" else 3


def _cmd_exact(args) -> int:
    hg = _build_from_args(args)
    graph = search.line_graph(hg, max_edges=args.max_vertices)
    seed: tuple[int, ...] = ()
    if args.seed_vt and args.q == 2 and args.s == 1:
        best = max((codes.vt_code(args.n, a) for a in range(args.n + 1)), key=lambda c: c.size)
        seed = tuple(x.rank() for x in best.members)
    hint = None
    if args.lp_hint:
        hint = lp.solve_fractional_matching(hg).floor()
    res = search.max_independent_set(
        graph, node_budget=args.budget_nodes, seed=seed, upper_bound_hint=hint
    )
    print(
        json.dumps(
            {
                "size": res.size,
                "proven_optimal": res.proven_optimal,
                "upper_bound": res.upper_bound,
                "nodes": res.nodes,
            }
        )
    )
    if args.witness_out:
        witness = res.witness_strings(graph)
        Path(args.witness_out).write_text("".join(f"{x}\n" for x in witness))
    return 0 if res.proven_optimal else 3


def _cmd_codes(args) -> int:
    if args.family == "vt":
        book = codes.vt_code(args.n, args.a, verify=args.check)
        print(f"|VT_{args.a}({args.n})| = {book.size}")
        _emit(codes.to_text(book), args.output) if args.output else None
        return 0
    if args.family == "tenengolts":
        if args.best:
            size, provenance = codes.best_known_size(args.q, args.n)
            print(f"best tenengolts class for q={args.q}, n={args.n}: {size} ({provenance})")
            return 0
        book = codes.tenengolts_code(args.q, args.n, args.beta, args.gamma)
        print(f"|{book.provenance}| = {book.size} for q={args.q}, n={args.n}")
        if args.output:
            _emit(codes.to_text(book), args.output)
        return 0
    # verify
    book = codes.from_text(Path(args.file).read_text(), args.q, s=args.s)
    ok, pair = codes.verify_codebook(book, args.s)
    if ok:
        print(f"valid: {book.size} codewords correct {args.s} deletions")
        return 0
    print(f"INVALID: {pair[0]} and {pair[1]} are within edit distance {2 * args.s}")
    return 2


def _cmd_table(args) -> int:
    which = args.which[-1]
    try:
        csv = reports.table1_csv(
            which,
            lp_mode=args.lp_mode,
            lp_edge_cap=args.lp_cap,
            max_size=args.max_vertices,
        )
    except ResourceLimitError as exc:
        print(f"resource cap hit: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"column ordering violated: {exc}", file=sys.stderr)
        return 2
    _emit(csv, args.output)
    return 0


def _cmd_fig(args) -> int:
    try:
        if args.which == "1":
            csv = reports.fig1_csv()
        else:
            csv = reports.fig2_csv()
    except AssertionError as exc:
        print(f"figure invariant violated: {exc}", file=sys.stderr)
        return 2
    _emit(csv, args.output)
    return 0


def _cmd_suite(args) -> int:
    code, summary = reports.run_suite(args.name)
    print(json.dumps(summary, indent=2))
    return code


def _add_instance_args(p, with_s=True):
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, required=True, help="string length")
    if with_s:
        p.add_argument("--s", type=int, default=1, help="number of deletions")
    p.add_argument(
        "--max-vertices",
        type=int,
        default=hypergraph.DEFAULT_SIZE_CAP,
        help="resource cap on hypergraph size",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delbounds", description="bounds workbench for deletion-correcting codes"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate closed-form bounds")
    bound_sub = p_bound.add_subparsers(dest="kind", required=True)
    b_single = bound_sub.add_parser("single")
    b_single.add_argument("--q", type=int, required=True)
    b_single.add_argument("--n", type=int, required=True)
    b_multi = bound_sub.add_parser("multi")
    _add_instance_args(b_multi)
    b_rate = bound_sub.add_parser("rate")
    b_rate.add_argument("--q", type=int, required=True)
    b_rate.add_argument("--tau", type=float, required=True)
    b_rll = bound_sub.add_parser("rll")
    b_rll.add_argument("--n", type=int, required=True)
    b_rll.add_argument("--d", type=int, required=True)
    p_bound.set_defaults(func=_cmd_bound)

    p_lp = sub.add_parser("lp", help="solve or export the fractional LPs")
    lp_sub = p_lp.add_subparsers(dest="action", required=True)
    for action in ("solve", "export"):
        pa = lp_sub.add_parser(action)
        pa.add_argument("--q", type=int)
        pa.add_argument("--n", type=int)
        pa.add_argument("--s", type=int, default=1)
        pa.add_argument("--max-vertices", type=int, default=hypergraph.DEFAULT_SIZE_CAP)
        pa.add_argument("--problem", choices=("matching", "transversal"), default="matching")
        if action == "solve":
            pa.add_argument("--mps", help="solve an MPS file instead of building an instance")
            pa.add_argument("--lp-mode", choices=("float", "exact"), default="float")
            pa.add_argument("--solution-out", help="write the solution vector as JSON")
        else:
            pa.add_argument("--format", choices=("mps", "json"), default="mps")
            pa.add_argument("-o", "--output")
    p_lp.set_defaults(func=_cmd_lp)

    p_exact = sub.add_parser("exact", help="exact optimum by branch and bound")
    exact_sub = p_exact.add_subparsers(dest="action", required=True)
    pe = exact_sub.add_parser("mis")
    _add_instance_args(pe)
    pe.add_argument("--budget-nodes", type=int, default=search.DEFAULT_NODE_BUDGET)
    pe.add_argument("--seed-vt", action="store_true", help="seed with the best VT class")
    pe.add_argument("--lp-hint", action="store_true", help="use the LP floor as a bound hint")
    pe.add_argument("--witness-out", help="write the witness codebook to a file")
    p_exact.set_defaults(func=_cmd_exact)

    p_codes = sub.add_parser("codes", help="construct and verify codebooks")
    codes_sub = p_codes.add_subparsers(dest="family", required=True)
    pv = codes_sub.add_parser("vt")
    pv.add_argument("--n", type=int, required=True)
    pv.add_argument("--a", type=int, default=0)
    pv.add_argument("--check", action="store_true")
    pv.add_argument("-o", "--output")
    pt = codes_sub.add_parser("tenengolts")
    pt.add_argument("--q", type=int, required=True)
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--beta", type=int, default=0)
    pt.add_argument("--gamma", type=int, default=0)
    pt.add_argument("--best", action="store_true", help="sweep the whole family")
    pt.add_argument("-o", "--output")
    pc = codes_sub.add_parser("verify")
    pc.add_argument("file")
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--s", type=int, default=1)
    p_codes.set_defaults(func=_cmd_codes)

    p_table = sub.add_parser("table", help="emit a bound table as CSV")
    p_table.add_argument("which", choices=("1a", "1b", "1c", "1d"))
    p_table.add_argument("--lp-mode", choices=("float", "exact"), default="float")
    p_table.add_argument("--lp-cap", type=int, default=reports.DEFAULT_LP_EDGE_CAP)
    p_table.add_argument("--max-vertices", type=int, default=1 << 20)
    p_table.add_argument("-o", "--output")
    p_table.set_defaults(func=_cmd_table)

    p_fig = sub.add_parser("fig", help="emit figure data as CSV")
    p_fig.add_argument("which", choices=("1", "2"))
    p_fig.add_argument("-o", "--output")
    p_fig.set_defaults(func=_cmd_fig)

    p_suite = sub.add_parser("suite", help="run a verification suite")
    p_suite.add_argument("name", choices=sorted(reports.SUITES))
    p_suite.set_defaults(func=_cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource cap hit: {exc}", file=sys.stderr)
        return 3
    except ConstructionError as exc:
        print(f"construction failed verification: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
