"""Command-line interface: oracles, solvers, and theorem verification."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness
from .choosability import is_dk_choosable, is_f_choosable
from .corpus import named_graph
from .decomposition import decompose_general, decompose_k1
from .errors import FalsificationError, GraphFormatError
from .graphs import (
    Graph,
    parse_dimacs_col,
    parse_edge_list,
    parse_graph6,
    serialize_graph6,
)
from .oracles import invariant_report
from .recolorer import color_delta_minus_1, color_delta_minus_k
from .strong_coloring import strong_color, verify_strong_coloring
from .transversal import VertexPartition, find_independent_transversal
from .errors import HypothesisError


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    elif source.startswith("@"):
        with open(source[1:]) as fh:
            text = fh.read()
    elif fmt == "graph6" and not source.startswith("name:"):
        text = source
    else:
        text = source
    if source.startswith("name:"):
        return named_graph(source[5:])
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0])
    if fmt == "dimacs":
        return parse_dimacs_col(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def _read_partition(path: str, n: int) -> VertexPartition:
    blocks = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                blocks.append([int(tok) for tok in line.split()])
    return VertexPartition.from_lists(n, blocks)


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")


def main(argv: list[str] | None = None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "dimacs", "edges"),
                        default="graph6")
    common.add_argument("--json", action="store_true")
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--max-n", type=int, default=8)
    common.add_argument("--trace", action="store_true")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="densecolor",
        description="Exact graph-coloring algorithms and theorem verification.",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", parents=[common],
                       help="exact invariants of one graph")
    p.add_argument("graph")

    p = sub.add_parser("choosable", parents=[common],
                       help="f- or d_k-choosability verdict")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--demands", default=None,
                   help="JSON list of per-vertex list sizes")

    p = sub.add_parser("transversal", parents=[common],
                       help="independent transversal or certificate")
    p.add_argument("graph")
    p.add_argument("--partition", required=True,
                   help="file: one block per line, space-separated vertices")

    p = sub.add_parser("strong-color", parents=[common],
                       help="constructive strong coloring")
    p.add_argument("graph")
    p.add_argument("--partition", required=True)
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="big-clique decomposition")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--t", default=None, help="clique-size threshold (rational ok)")

    p = sub.add_parser("color", parents=[common],
                       help="recoloring-procedure coloring")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--gamma", type=int, default=None)

    p = sub.add_parser("verify", parents=[common],
                       help="run a theorem-verification suite")
    p.add_argument("suite", choices=harness.ALL_SUITES + ("all",))

    args = parser.parse_args(argv)

    try:
        return _dispatch(args)
    except (GraphFormatError, HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FalsificationError as exc:
        print(f"RED ALERT (falsification): {exc}", file=sys.stderr)
        print(json.dumps(exc.state, sort_keys=True, default=str), file=sys.stderr)
        return 3


def _dispatch(args) -> int:
    if args.command == "oracle":
        g = _read_graph(args.graph, args.format)
        report = invariant_report(g)
        _emit({"graph": serialize_graph6(g), **report.to_dict()}, args.json)
        return 0

    if args.command == "choosable":
        g = _read_graph(args.graph, args.format)
        if args.demands is not None:
            verdict = is_f_choosable(g, json.loads(args.demands))
        else:
            verdict = is_dk_choosable(g, 0 if args.k is None else args.k)
        payload = {
            "graph": serialize_graph6(g),
            "lists": ([sorted(L) for L in verdict.witness]
                      if verdict.witness is not None else None),
            "verdict": verdict.choosable,
        }
        if args.trace:
            payload["stats"] = verdict.stats
        _emit(payload, args.json)
        return 0

    if args.command == "transversal":
        g = _read_graph(args.graph, args.format)
        p = _read_partition(args.partition, g.n)
        out = find_independent_transversal(g, p)
        if out.transversal is not None:
            _emit({"transversal": list(out.transversal)}, args.json)
        else:
            cert = out.certificate
            _emit({
                "transversal": None,
                "certificate": {
                    "blocks": sorted(cert.block_indices),
                    "matching": [list(e) for e in cert.matching],
                    "root_edge": list(cert.root_edge),
                    "edges": sorted([list(e) for e in cert.certified_edges]),
                },
            }, args.json)
        return 0

    if args.command == "strong-color":
        g = _read_graph(args.graph, args.format)
        p = _read_partition(args.partition, g.n)
        res = strong_color(g, p, args.r, want_trace=args.trace)
        ok = verify_strong_coloring(g, p, args.r, res.coloring)
        payload = {"coloring": res.coloring, "repairs": res.repairs,
                   "verified": ok, "padded_order": res.padded.n}
        if args.trace:
            for line in res.trace:
                print(json.dumps(line, sort_keys=True))
        _emit(payload, args.json)
        return 0 if ok else 1

    if args.command == "decompose":
        g = _read_graph(args.graph, args.format)
        if args.k == 1 and (args.t is None or "/" not in str(args.t)):
            t = int(args.t) if args.t is not None else max(
                (g.max_degree() + 5 + 1) // 2, 2)
            deco = decompose_k1(g, t)
        else:
            t = Fraction(args.t) if args.t is not None else None
            from .decomposition import threshold_U
            from .oracles import clique_number
            if t is None:
                t = threshold_U(args.k, clique_number(g), g.max_degree())
            deco = decompose_general(g, args.k, t)
        _emit(deco.to_dict(), args.json)
        return 0

    if args.command == "color":
        g = _read_graph(args.graph, args.format)
        if args.gamma is not None:
            res = color_delta_minus_k(g, args.k or 1, args.gamma)
        else:
            res = color_delta_minus_1(g, args.k)
        payload = {
            "coloring": res.coloring,
            "palette": res.palette,
            "constructive": res.constructive,
            "flags": {key: bool(val) for key, val in res.flags.items()},
        }
        if args.trace:
            for line in res.stages:
                print(json.dumps(line, sort_keys=True, default=str))
        _emit(payload, args.json)
        return 0 if res.coloring is not None else 1

    if args.command == "verify":
        suites = harness.ALL_SUITES if args.suite == "all" else (args.suite,)
        exit_code = 0
        for name in suites:
            report = harness.run_suite(name, max_n=args.max_n,
                                       seed=args.seed, jobs=args.jobs)
            line = json.dumps(report, sort_keys=True, default=str)
            print(line)
            if report["alerts"]:
                exit_code = 1
        return exit_code

    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
