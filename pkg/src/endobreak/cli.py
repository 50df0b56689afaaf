"""Command line interface: ``endobreak {gen,profile,check-coloring,bound,mc}``.

Exit codes: 0 on success, 1 when some input lines of ``profile`` failed,
2 for invocation errors. Every command writes JSON (or graph6) to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence, TextIO

from . import graph as gc
from .bounds import CHECKS, monte_carlo_distinguishing
from .breaking import find_color_preserving_auto, find_color_preserving_endo
from .census import DEFAULT_MAX_ENDOS, SLOW_FIELDS, invariant_profile
from .graph6 import Graph6Error, parse_graph6, write_graph6

EXIT_OK, EXIT_PARTIAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out: TextIO) -> None:
    out.write(json.dumps(obj) + "\n")


def _graph_arg(text: str) -> gc.Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise argparse.ArgumentTypeError(f"bad graph6 {text!r}: {exc}") from None


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {', '.join(missing)}")


def cmd_gen(args, out: TextIO) -> int:
    cap = args.max_order
    fam = args.family
    if fam == "complete":
        _need(args, "n")
        graphs = [gc.make_complete(args.n, max_order=cap)]
    elif fam == "cycle":
        _need(args, "n")
        graphs = [gc.make_cycle(args.n, max_order=cap)]
    elif fam == "path":
        _need(args, "n")
        graphs = [gc.make_path(args.n, max_order=cap)]
    elif fam == "bipartite":
        _need(args, "m", "n")
        graphs = [gc.make_complete_bipartite(args.m, args.n, max_order=cap)]
    elif fam == "hypercube":
        _need(args, "k")
        graphs = [gc.make_hypercube(args.k, max_order=cap)]
    elif fam == "power":
        _need(args, "k")
        if args.base is not None:
            base = args.base
        elif args.n is not None:
            base = gc.make_complete(args.n, max_order=cap)
        else:
            raise UsageError("family power needs --base G6 or --n")
        graphs = [gc.cartesian_power(base, args.k, max_order=cap)]
    else:
        _need(args, "n")
        seed = 0 if args.seed is None else args.seed
        graphs = [
            gc.random_tree(args.n, seed + i, max_order=cap) for i in range(args.count)
        ]
    for g in graphs:
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


def _workers() -> int:
    raw = os.environ.get("ENDOBREAK_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"ENDOBREAK_THREADS must be an integer, got {raw!r}")


def cmd_profile(args, out: TextIO) -> int:
    skip = [s for s in (args.skip or "").split(",") if s]
    bad = set(skip) - set(SLOW_FIELDS)
    if bad:
        raise UsageError(f"unknown --skip fields {sorted(bad)}; choose from {list(SLOW_FIELDS)}")
    if args.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.input) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(str(exc))
    jobs = [(i, line) for i, line in enumerate(lines, 1) if line.strip()]

    def run(job):
        lineno, text = job
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            return {"line": lineno, "error": str(exc), "kind": type(exc).__name__}
        return invariant_profile(g, args.max_endos, skip)

    workers = _workers()
    status = EXIT_OK
    with ThreadPoolExecutor(workers) as pool:
        # map keeps input order, so output does not depend on the pool size
        results = map(run, jobs) if workers == 1 else pool.map(run, jobs)
        for rec in results:
            if "error" in rec:
                status = EXIT_PARTIAL
            _emit(rec, out)
    return status


def cmd_check_coloring(args, out: TextIO) -> int:
    g, colors = args.graph, args.colors
    if len(colors) != g.order:
        raise UsageError(f"{len(colors)} colors given for {g.order} vertices")
    if any(c < 0 for c in colors):
        raise UsageError("colors must be non-negative")
    find = find_color_preserving_endo if args.mode == "endo" else find_color_preserving_auto
    f = find(g, colors)
    _emit(
        {
            "mode": args.mode,
            "distinguishing": f is None,
            "counterexample": None if f is None else list(f),
        },
        out,
    )
    return EXIT_OK


def cmd_bound(args, out: TextIO) -> int:
    if args.lemma == "rs":
        report = CHECKS["rs"](args.graph, args.d)
    else:
        report = CHECKS[args.lemma](args.graph, args.d, args.max_endos)
    _emit(report.to_dict(), out)
    return EXIT_OK


def cmd_mc(args, out: TextIO) -> int:
    est = monte_carlo_distinguishing(
        args.graph, args.d, args.trials, bias=args.bias, seed=args.seed
    )
    _emit({**est.to_dict(), "seed": args.seed, "d": args.d}, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="endobreak",
        description="Endomorphism symmetry-breaking invariants of finite graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate graphs as graph6 lines")
    g.add_argument(
        "--family",
        required=True,
        choices=["complete", "cycle", "path", "bipartite", "hypercube", "power", "tree"],
    )
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--base", type=_graph_arg, help="graph6 base graph for --family power")
    g.add_argument("--seed", type=int)
    g.add_argument("--count", type=int, default=1, help="number of random trees")
    g.add_argument("--max-order", type=int, default=gc.DEFAULT_MAX_ORDER)
    g.set_defaults(func=cmd_gen)

    pr = sub.add_parser("profile", help="invariant profile per graph6 input line")
    pr.add_argument("--input", help="graph6 file, or - for stdin (default)")
    pr.add_argument("--max-endos", type=int, default=DEFAULT_MAX_ENDOS)
    pr.add_argument("--skip", help=f"comma list from {','.join(SLOW_FIELDS)}")
    pr.add_argument("--json", action="store_true", help="JSON lines (the only format)")
    pr.set_defaults(func=cmd_profile)

    c = sub.add_parser("check-coloring", help="test a coloring for distinguishing")
    c.add_argument("--graph", required=True, type=_graph_arg)
    c.add_argument("--colors", required=True, type=_csv_ints)
    c.add_argument("--mode", choices=["endo", "auto"], default="endo")
    c.set_defaults(func=cmd_check_coloring)

    b = sub.add_parser("bound", help="exact check of a distinguishing bound")
    b.add_argument("--graph", required=True, type=_graph_arg)
    b.add_argument("--lemma", required=True, choices=sorted(CHECKS))
    b.add_argument("--d", required=True, type=int)
    b.add_argument("--max-endos", type=int, default=DEFAULT_MAX_ENDOS)
    b.set_defaults(func=cmd_bound)

    m = sub.add_parser("mc", help="Monte Carlo share of distinguishing colorings")
    m.add_argument("--graph", required=True, type=_graph_arg)
    m.add_argument("--d", required=True, type=int)
    m.add_argument("--trials", required=True, type=int)
    m.add_argument("--seed", required=True, type=int)
    m.add_argument("--bias", type=_csv_floats)
    m.set_defaults(func=cmd_mc)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"endobreak {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
