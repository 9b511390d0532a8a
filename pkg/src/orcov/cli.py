"""Command-line frontend.

Machine-readable results go to stdout, diagnostics to stderr.  Exit
codes: 0 success or accept, 1 cover verification rejected, 2 usage or
input error, 3 capacity or budget error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cover import (
    certificate_from_json,
    certificate_to_json,
    construct_cover,
    verify_cover,
)
from .errors import BudgetError, CapacityError, ParseError
from .families import (
    format_subset,
    hosten_morris,
    lambda_provenance,
    sorted_mif_masks,
)
from .graphs import (
    DEFAULT_CHI_VERTEX_BOUND,
    Graph,
    chromatic_number,
    parse_edge_list,
    parse_graph6,
)
from .oracle import SearchBudget, brute_sigma
from .sigma import sigma_complete, sigma_estimate, sigma_of_graph

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="ascii")


def sniff_format(text: str) -> str:
    """Graph6 iff the first line has no whitespace and starts >= byte 63."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty graph input")
    first = stripped.splitlines()[0]
    if first.startswith(">>graph6<<"):
        return "graph6"
    if any(ch.isspace() for ch in first.strip()):
        return "edgelist"
    if ord(first[0]) >= 63:
        return "graph6"
    return "edgelist"


def load_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read_source(path)
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _add_graph_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph", help="graph file (edge list or graph6), or - for stdin")
    sub.add_argument(
        "--format",
        choices=["auto", "graph6", "edgelist"],
        default="auto",
        help="input format (default: sniff)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orcov",
        description="Orientation covering numbers, maximal intersecting families, "
        "and verified minimum covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="count maximal intersecting families over [k]")
    p.add_argument("k", type=int)
    p.add_argument("--literature-table", action="store_true")

    p = sub.add_parser("enumerate-mifs", help="list all maximal intersecting families")
    p.add_argument("k", type=int)
    p.add_argument(
        "--stream",
        action="store_true",
        help="print families as raw masks are walked (same bytes, lower memory)",
    )

    p = sub.add_parser("sigma-complete", help="covering number of the complete graph K_n")
    p.add_argument("n", type=int)
    p.add_argument("--literature-table", action="store_true")

    p = sub.add_parser("sigma", help="covering number of a graph: prints sigma chi witness_k")
    _add_graph_arg(p)
    p.add_argument("--literature-table", action="store_true")
    p.add_argument("--max-chi-vertices", type=int, default=DEFAULT_CHI_VERTEX_BOUND)

    p = sub.add_parser("estimate", help="closed-form estimate of sigma(K_n): prints raw rounded")
    p.add_argument("n", type=int)

    p = sub.add_parser("construct-cover", help="build a verified minimum cover")
    _add_graph_arg(p)
    p.add_argument("--out", help="write the certificate JSON to this file")
    p.add_argument("--json", action="store_true", help="print the certificate JSON to stdout")
    p.add_argument("--max-chi-vertices", type=int, default=DEFAULT_CHI_VERTEX_BOUND)

    p = sub.add_parser("verify-cover", help="check a certificate against a graph")
    _add_graph_arg(p)
    p.add_argument("certificate", help="certificate JSON file, or - for stdin")

    p = sub.add_parser("brute-sigma", help="exhaustive-search covering number (oracle)")
    _add_graph_arg(p)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--timeout", type=float, default=300.0)

    p = sub.add_parser("chromatic", help="exact chromatic number")
    _add_graph_arg(p)
    p.add_argument("--max-chi-vertices", type=int, default=DEFAULT_CHI_VERTEX_BOUND)

    return parser


def _run_command(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "lambda":
        value = hosten_morris(args.k, literature_table=args.literature_table)
        print(f"{value} {lambda_provenance(args.k)}")
        return EXIT_OK
    if cmd == "enumerate-mifs":
        if args.stream:
            subset_str = [format_subset(s) for s in range(1 << args.k)]
            write = sys.stdout.write
            for mask in sorted_mif_masks(args.k):
                parts = []
                while mask:
                    lsb = mask & -mask
                    parts.append(subset_str[lsb.bit_length() - 1])
                    mask ^= lsb
                parts.append("\n")
                write("".join(parts))
        else:
            from .families import enumerate_mifs

            for fam in enumerate_mifs(args.k).families:
                print(fam.format())
        return EXIT_OK
    if cmd == "sigma-complete":
        res = sigma_complete(args.n, literature_table=args.literature_table)
        print(res.value)
        return EXIT_OK
    if cmd == "sigma":
        g = load_graph(args.graph, args.format)
        res = sigma_of_graph(
            g,
            literature_table=args.literature_table,
            max_chi_vertices=args.max_chi_vertices,
        )
        print(f"{res.value} {res.chi} {res.witness_k}")
        return EXIT_OK
    if cmd == "estimate":
        est = sigma_estimate(args.n)
        print(f"{est.raw:.6f} {est.rounded}")
        return EXIT_OK
    if cmd == "construct-cover":
        g = load_graph(args.graph, args.format)
        cert = construct_cover(g, max_chi_vertices=args.max_chi_vertices)
        text = certificate_to_json(g, cert)
        if args.out:
            Path(args.out).write_text(text + "\n", encoding="ascii")
        if args.json:
            print(text)
        else:
            verdict = verify_cover(g, cert.orientations)
            if verdict is not None:
                print(f"counterexample {verdict[0]} {verdict[1]} {verdict[2]}")
                return EXIT_REJECTED
            print(f"{cert.k} accept")
        return EXIT_OK
    if cmd == "verify-cover":
        g = load_graph(args.graph, args.format)
        cert = certificate_from_json(_read_source(args.certificate), g)
        verdict = verify_cover(g, cert.orientations)
        if verdict is None:
            print("accept")
            return EXIT_OK
        print(f"counterexample {verdict[0]} {verdict[1]} {verdict[2]}")
        return EXIT_REJECTED
    if cmd == "brute-sigma":
        g = load_graph(args.graph, args.format)
        budget = SearchBudget(
            max_edges=args.max_edges, max_k=args.max_k, timeout=args.timeout
        )
        result = brute_sigma(g, budget)
        print(f"> {args.max_k}" if result is None else result)
        return EXIT_OK
    if cmd == "chromatic":
        g = load_graph(args.graph, args.format)
        print(chromatic_number(g, max_vertices=args.max_chi_vertices))
        return EXIT_OK
    raise AssertionError(f"unhandled command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _run_command(args)
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the pipe; finish quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_REJECTED
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
