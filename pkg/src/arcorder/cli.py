"""Command-line front end.

Exit codes: 0 success / holds / found, 1 check failed or nothing found (the
certificate goes to stdout), 2 usage or parse error, 3 search cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import arcs, audit, graph, oracles
from .ordering import Reading, check_circular, check_proper_circular, parse_ordering

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

READING_HELP = (
    "betweenness reading for v_i < v_l < v_j: 'cyclic' means l is strictly inside the "
    "clockwise run from i to j, wrapping around the circle; 'linear' compares positions "
    "as integers without wrapping, which coincides with interval orderings (default: cyclic)"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> str:
    return Path(path).read_text()


def _ordering_arg(value: str):
    # accept either a path to an ordering file or the ordering itself
    if os.path.isfile(value):
        value = _read(value)
    return parse_ordering(value)


def _add_reading(p: argparse.ArgumentParser) -> None:
    p.add_argument("--reading", choices=[r.value for r in Reading], default=Reading.CYCLIC.value, help=READING_HELP)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="arcorder",
        description="Vertex-ordering tools for circular-arc graphs and their powers.",
        epilog="The betweenness relation on the circle is ambiguous; see --reading on each subcommand.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("power", help="k-th power of a graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")

    p = sub.add_parser("distances", help="all-pairs BFS distances ('inf' when disconnected)")
    p.add_argument("graph")

    p = sub.add_parser("check-ordering", help="check an ordering against the circular condition")
    p.add_argument("--proper", action="store_true")
    _add_reading(p)
    p.add_argument("graph")
    p.add_argument("ordering", help="ordering file or inline ids, e.g. \"1 2 3\"")

    p = sub.add_parser("build-model", help="arc model built from a graph and an ordering")
    p.add_argument("graph")
    p.add_argument("ordering")

    p = sub.add_parser("model-graph", help="intersection graph of an arc model")
    p.add_argument("model")

    p = sub.add_parser("check-model-proper", help="report an arc strictly inside another")
    p.add_argument("model")

    p = sub.add_parser("extract-ordering", help="order vertices by clockwise arc end")
    p.add_argument("model")

    p = sub.add_parser("find-ordering", help="exhaustive search for an accepted ordering")
    p.add_argument("--proper", action="store_true")
    _add_reading(p)
    p.add_argument("--max-n", type=int, default=oracles.ORDERING_CAP)
    p.add_argument("graph")

    p = sub.add_parser("find-model", help="exhaustive search for an arc model")
    p.add_argument("--proper", action="store_true")
    p.add_argument("--max-n", type=int, default=oracles.MODEL_CAP)
    p.add_argument("graph")

    p = sub.add_parser("audit", help="run every theorem trial over the audit corpus")
    p.add_argument("--n0", type=int, default=audit.AuditConfig.n0)
    p.add_argument("--trials", type=int, default=audit.AuditConfig.trials)
    p.add_argument("--seed", type=int, default=audit.AuditConfig.seed)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("generate", help="emit random or enumerated graphs")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"))
    group.add_argument("--enumerate", type=int, metavar="N")
    p.add_argument("--connected", action="store_true", help="with --enumerate, connected graphs only")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _run(args) -> int:
    cmd = args.command
    if cmd == "power":
        if args.k < 1:
            raise ValueError("-k must be at least 1")
        _emit(graph.serialize_graph(graph.power(graph.parse_graph(_read(args.graph)), args.k)))
        return EXIT_OK

    if cmd == "distances":
        dm = graph.all_pairs_distances(graph.parse_graph(_read(args.graph)))
        for row in dm.rows:
            _emit(" ".join("inf" if d == graph.INF else str(d) for d in row) + "\n")
        return EXIT_OK

    if cmd == "check-ordering":
        g = graph.parse_graph(_read(args.graph))
        sigma = _ordering_arg(args.ordering)
        check = check_proper_circular if args.proper else check_circular
        v = check(g, sigma, Reading(args.reading))
        if v is None:
            _emit("ok\n")
            return EXIT_OK
        _emit(v.line() + "\n")
        return EXIT_FAIL

    if cmd == "build-model":
        g = graph.parse_graph(_read(args.graph))
        _emit(arcs.serialize_model(arcs.build_model(g, _ordering_arg(args.ordering))))
        return EXIT_OK

    if cmd == "model-graph":
        _emit(graph.serialize_graph(arcs.intersection_graph(arcs.parse_model(_read(args.model)))))
        return EXIT_OK

    if cmd == "check-model-proper":
        witness = arcs.containment_witness(arcs.parse_model(_read(args.model)))
        if witness is None:
            _emit("proper\n")
            return EXIT_OK
        _emit(f"containment inner={witness[0]} outer={witness[1]}\n")
        return EXIT_FAIL

    if cmd == "extract-ordering":
        _emit(f"{arcs.extract_ordering(arcs.parse_model(_read(args.model)))}\n")
        return EXIT_OK

    if cmd == "find-ordering":
        g = graph.parse_graph(_read(args.graph))
        out = oracles.find_circular_ordering(g, Reading(args.reading), args.proper, max_n=args.max_n)
        return _report_search(out, lambda w: f"{w}\n")

    if cmd == "find-model":
        g = graph.parse_graph(_read(args.graph))
        out = oracles.find_arc_model(g, args.proper, max_n=args.max_n)
        return _report_search(out, arcs.serialize_model)

    if cmd == "audit":
        cfg = audit.AuditConfig(n0=args.n0, trials=args.trials, seed=args.seed)
        report = audit.run_audit(cfg, workers=args.workers)
        text = report.render()
        if args.out:
            Path(args.out).write_text(text)
        else:
            _emit(text)
        bad = audit.asserted_failures(report)
        for r in bad:
            print(f"unexpected failure: {r.line()}", file=sys.stderr)
        return EXIT_FAIL if bad else EXIT_OK

    if cmd == "generate":
        if args.random:
            n, p, seed = int(args.random[0]), float(args.random[1]), int(args.random[2])
            _emit(graph.serialize_graph(graph.random_graph(n, p, seed)))
        else:
            for g in graph.enumerate_graphs(args.enumerate, args.connected):
                _emit(graph.serialize_graph(g))
        return EXIT_OK

    raise AssertionError(cmd)


def _report_search(out: oracles.RecognitionOutcome, render) -> int:
    if out.found:
        _emit(f"found searched={out.searched}\n")
        _emit(render(out.witness))
        return EXIT_OK
    _emit(f"not-found searched={out.searched}\n")
    return EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return _run(args)
    except oracles.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
