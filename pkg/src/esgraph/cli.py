"""Command-line front end.

Exit codes: 0 success, 1 a gating claim failed, 2 bad input, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import claims
from .domination import CED_SEARCH_MAX_EPSILON, ced_report
from .edgedeg import edge_degree_report
from .errors import DomainError, EsgError, ParseError, ResourceLimitError
from .esg import EXPLICIT, EXPLICIT_MAX_EPSILON, SWEEP_MAX_EPSILON, EdgeSetGraph, compare_degree_sums, degree_profile
from .graph import Graph, load_graph
from .subsets import format_mask, mask_to_index

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _guard(g: Graph, requested: int | None, hard: int) -> None:
    limit = hard if requested is None else min(requested, hard)
    if g.epsilon > limit:
        raise ResourceLimitError(f"{g.label()} has {g.epsilon} edges; limit is {limit}")


def cmd_build(args) -> int:
    g = load_graph(args.input)
    _guard(g, args.max_epsilon, EXPLICIT_MAX_EPSILON)
    esg = EdgeSetGraph(g, EXPLICIT)
    if args.format == "dot":
        text = esg.to_dot()
    elif args.format == "table":
        rows = [f"# Gamma({g.label()}): {esg.order} vertices, {esg.to_graph().epsilon} edges"]
        for mask in sorted(esg.vertices(), key=lambda m: mask_to_index(m, g.epsilon)):
            s, i = mask_to_index(mask, g.epsilon)
            rows.append(f"v({s},{i})\t{format_mask(mask)}\t{esg.degree(mask)}")
        text = "\n".join(rows) + "\n"
    else:
        text = _dump(esg.to_json())
    _emit(text, args.output)
    return EXIT_OK


def cmd_profile(args) -> int:
    g = load_graph(args.input)
    _guard(g, args.max_epsilon, SWEEP_MAX_EPSILON)
    prof = degree_profile(g)
    if args.format == "table":
        text = (
            f"host        {g.label()}\n"
            f"epsilon     {g.epsilon}\n"
            f"delta       {prof.delta}\n"
            f"Delta       {prof.Delta}\n"
            f"max_count   {prof.max_count}\n"
            f"degree_sum  {prof.degree_sum}\n"
            f"eulerian    {str(prof.eulerian).lower()}\n"
        )
    else:
        text = _dump(prof.to_json())
    _emit(text, args.output)
    return EXIT_OK


def cmd_ced(args) -> int:
    g = load_graph(args.input)
    _guard(g, args.max_epsilon, CED_SEARCH_MAX_EPSILON)
    _emit(_dump(ced_report(g).to_json()), args.output)
    return EXIT_OK


def cmd_edge_degrees(args) -> int:
    g = load_graph(args.input)
    _emit(_dump(edge_degree_report(g).to_json()), args.output)
    return EXIT_OK


def cmd_setgraph_compare(args) -> int:
    g = load_graph(args.input)
    _guard(g, args.max_epsilon, SWEEP_MAX_EPSILON)
    cmp = compare_degree_sums(g)
    _emit(_dump({"host": g.label(), "epsilon": g.epsilon, **cmp._asdict()}), args.output)
    return EXIT_OK


def _table(verdicts: list[claims.ClaimVerdict]) -> str:
    width = max((len(v.claim_id) for v in verdicts), default=8)
    lines = []
    for v in verdicts:
        flag = " (verdict-only)" if v.verdict_only else ""
        computed = v.computed if not isinstance(v.computed, (dict, list)) else json.dumps(v.computed)
        lines.append(f"{v.status:<14} {v.claim_id:<{width}}  {v.instance}  -> {computed}{flag}")
    gating = sum(v.gating_failure for v in verdicts)
    lines.append(f"{len(verdicts)} verdicts, {gating} gating failure(s)")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.claim:
        params = {"n": args.n, "eps_max": args.eps_max, "nu_max": args.nu_max, "seed": args.seed}
        verdicts = [claims.run_claim(args.claim, params)]
    else:
        verdicts = claims.run_all(args.profile, seed=args.seed)
    report = _dump([v.to_json() for v in verdicts])
    if args.format == "json":
        _emit(report, args.output)
    else:
        sys.stdout.write(_table(verdicts))
        if args.output:
            _emit(report, args.output)
    return claims.exit_status(verdicts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="esgraph", description="Edge-set graphs of small connected graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json",), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", metavar="FILE", help="write to FILE instead of standard output")
        p.add_argument("--max-epsilon", type=int, help="lower the edge-count guard (never raises it)")

    for name, fn, formats, help_text in [
        ("build", cmd_build, ("json", "dot", "table"), "construct the edge-set graph"),
        ("profile", cmd_profile, ("json", "table"), "degree profile of the edge-set graph"),
        ("ced", cmd_ced, ("json",), "connected edge domination report"),
        ("edge-degrees", cmd_edge_degrees, ("json",), "edge-degree calculus of the host graph"),
        ("setgraph-compare", cmd_setgraph_compare, ("json",), "degree sums versus the set-graph"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="family spec (path:N, cycle:N, star:M, complete:N) or edge-list file")
        common(p, formats)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run the claim suite")
    common(p, ("table", "json"), "table")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--claim", help="run a single claim")
    p.add_argument("--n", type=int, help="family order for single-instance claims")
    p.add_argument("--eps-max", type=int, help="edge bound for sweeping claims")
    p.add_argument("--nu-max", type=int, help="vertex bound for sweeping claims")
    p.add_argument("--seed", type=int, help=f"seed for random sweeps (default {claims.DEFAULT_SEED})")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"esgraph: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, DomainError, OSError) as exc:
        print(f"esgraph: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EsgError as exc:
        print(f"esgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
