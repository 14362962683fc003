"""Command-line front end: ingest -> solve -> rectify -> graph -> rank.

Exit codes: 0 on success (a restrictive diagnosis from ``check`` is a
result, not an error), 1 on domain or I/O errors, 2 on usage and parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import __version__
from .errors import MatrixError, ModelError, ParseError, QtmError
from .ingest import from_correlation, load_model, read_correlation_csv, serialize_model
from .model import Coupling, Polarity, TrendModel
from .objectives import rank
from .rectify import Objective, rectify
from .solver import is_restrictive, solve, steady_scenarios
from .transitions import build_graph, paths, terminals, to_dot
from . import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtm",
        description="Solve, repair, and analyse three-valued trend models.",
    )
    parser.add_argument("--version", action="version", version=f"qtm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def model_command(name: str, help_text: str, formats: tuple[str, ...]):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("model", help="path to a .qtm model file")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument(
            "--polarity",
            choices=[p.value for p in Polarity],
            help="override the model's polarity convention",
        )
        sp.add_argument(
            "--coupling",
            choices=[c.value for c in Coupling],
            help="override the model's default INC/DEC coupling",
        )
        return sp

    sp = model_command("solve", "enumerate all scenarios", ("text", "json"))
    sp.set_defaults(func=cmd_solve)

    sp = model_command(
        "graph", "build the scenario transition graph", ("text", "json", "dot")
    )
    sp.add_argument("--path-from", type=int, metavar="N", help="path query start index")
    sp.add_argument("--path-to", type=int, metavar="N", help="path query end index")
    sp.add_argument(
        "--max-path-len", type=int, default=10, metavar="K",
        help="maximum number of arcs in a queried path (default 10)",
    )
    sp.set_defaults(func=cmd_graph)

    sp = model_command(
        "rectify", "find optimal relation removals", ("text", "json")
    )
    sp.add_argument(
        "--objective", choices=[o.value for o in Objective], default="o1",
        help="o1 = fewest rows, o2 = least total weight (default o1)",
    )
    sp.set_defaults(func=cmd_rectify)

    sp = sub.add_parser("ingest", help="turn a correlation CSV into model text")
    sp.add_argument("csv", help="path to a correlation matrix CSV file")
    sp.add_argument(
        "--threshold", type=float, default=0.0, metavar="T",
        help="drop coefficients with magnitude <= T (default 0)",
    )
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_ingest)

    sp = model_command("rank", "grade scenarios against desired trends", ("text", "json"))
    sp.set_defaults(func=cmd_rank)

    sp = model_command("check", "validate and diagnose restrictiveness", ("text", "json"))
    sp.set_defaults(func=cmd_check)

    return parser


def _emit(payload: dict, args, text_renderer) -> int:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text_renderer(payload))
    return 0


def _load(args) -> TrendModel:
    model = load_model(args.model)
    if args.polarity:
        model = replace(model, polarity=Polarity(args.polarity))
    if args.coupling:
        model = replace(model, coupling=Coupling(args.coupling))
    return model


def cmd_solve(args) -> int:
    sset = solve(_load(args))
    return _emit(render.solve_payload(sset), args, render.solve_text)


def cmd_graph(args) -> int:
    if (args.path_from is None) != (args.path_to is None):
        print("qtm: error: --path-from and --path-to must be used together", file=sys.stderr)
        return 2
    sset = solve(_load(args))
    graph = build_graph(sset)
    query = None
    if args.path_from is not None:
        found = paths(graph, args.path_from, args.path_to, args.max_path_len)
        query = (args.path_from, args.path_to, args.max_path_len, found)
    if args.format == "dot":
        sys.stdout.write(to_dot(graph))
        return 0
    payload = render.graph_payload(graph, terminals(graph), query)
    return _emit(payload, args, render.graph_text)


def cmd_rectify(args) -> int:
    model = _load(args)
    objective = Objective(args.objective)
    restrictive = is_restrictive(model)
    removals = rectify(model, objective)
    payload = render.rectify_payload(model, objective, restrictive, removals)
    return _emit(payload, args, render.rectify_text)


def cmd_ingest(args) -> int:
    model = from_correlation(read_correlation_csv(args.csv), args.threshold)
    if args.format == "json":
        print(json.dumps(render.ingest_payload(model, args.threshold), indent=2))
    else:
        sys.stdout.write(serialize_model(model))
    return 0


def cmd_rank(args) -> int:
    sset = solve(_load(args))
    graph = build_graph(sset)
    report = rank(sset, graph)
    return _emit(render.rank_payload(report, sset), args, render.rank_text)


def cmd_check(args) -> int:
    model = _load(args)
    sset = solve(model)
    steady = [scn.index for scn in steady_scenarios(sset)]
    payload = render.check_payload(model, sset, is_restrictive(model), steady)
    return _emit(payload, args, render.check_text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ParseError, ModelError, MatrixError) as exc:
        print(f"qtm: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qtm: error: {exc}", file=sys.stderr)
        return 1
    except QtmError as exc:
        print(f"qtm: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
