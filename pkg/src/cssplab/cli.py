"""Command-line interface.

Subcommands: reduce, decide, verify, check-lemmas, color, gen-corpus.
Decisions and reports go to stdout, diagnostics to stderr. Exit codes:
0 completed (the YES/NO verdict lives in the output, not the code),
2 input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import CombinatorialBlowupError, CssplabError
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    parse_graph,
    path_graph,
    petersen_graph,
    random_graph,
    three_color_backtracking,
    to_col,
)
from .reduction import build_instance, parse_instance, render_instance
from .solvers import (
    DEFAULT_ENUMERATION_CAP,
    MODE_EXACT_FULL,
    MODE_EXACT_STRUCTURED,
    MODE_GREEDY,
    SolveReport,
    as_float_matrix,
    exact_brute_force,
    exact_structured,
    greedy_forward,
)
from .verify import run_bound_checks, verify_reduction


def _load_graph(path: str) -> tuple[Graph, str]:
    data = Path(path).read_bytes()
    return parse_graph(data), Path(path).stem


def cmd_reduce(args) -> int:
    graph, _ = _load_graph(args.input)
    inst = build_instance(graph)
    Path(args.output).write_text(render_instance(inst), encoding="ascii")
    print(f"n {inst.n}")
    print(f"m {inst.m}")
    print(f"t {inst.t}")
    print(f"tau_sq {inst.tau_sq}")
    return 0


def cmd_decide(args) -> int:
    inst = parse_instance(Path(args.input).read_text(encoding="ascii"))
    if args.mode == MODE_EXACT_FULL:
        report = exact_brute_force(inst.M, inst.k, inst.tau_sq, cap=args.cap)
    elif args.mode == MODE_EXACT_STRUCTURED:
        report = exact_structured(inst)
    else:
        selection, residual = greedy_forward(as_float_matrix(inst.M), inst.k)
        report = SolveReport(
            decision=bool(residual <= float(inst.tau_sq)),
            delta_sq=residual,
            best_selection=tuple(inst.M.cols[j] for j in selection),
            subsets_examined=len(selection),
            mode=MODE_GREEDY,
        )
        print("note: greedy mode is a float heuristic; its decision is not exact", file=sys.stderr)
    print(report.to_text(), end="")
    return 0


def cmd_verify(args) -> int:
    graph, name = _load_graph(args.input)
    report = verify_reduction(graph, mode=args.mode, cap=args.cap, graph_name=name)
    print(report.to_text(), end="")
    return 0


def cmd_check_lemmas(args) -> int:
    graph, name = _load_graph(args.input)
    report = run_bound_checks(graph, cap=args.cap, graph_name=name)
    print(report.to_text(), end="")
    return 0


def cmd_color(args) -> int:
    graph, _ = _load_graph(args.input)
    phi = three_color_backtracking(graph)
    if phi is None:
        print("no three-coloring")
    else:
        print("coloring " + " ".join(f"v{v}={phi[v]}" for v in sorted(phi)))
    return 0


def cmd_gen_corpus(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    corpus: list[tuple[str, Graph]] = [
        ("k2", complete_graph(2)),
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("p3", path_graph(3)),
        ("c5", cycle_graph(5)),
        ("petersen", petersen_graph()),
    ]
    corpus += [
        (f"rand_n4_s{seed:02d}", random_graph(4, 0.5, seed))
        for seed in range(args.seed, args.seed + 20)
    ]
    for name, graph in corpus:
        path = outdir / f"{name}.col"
        path.write_text(to_col(graph), encoding="ascii")
        print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cssplab",
        description="Exact rational laboratory for column subset selection "
        "instances built from graph three-coloring.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="build an instance file from a .col graph")
    p.add_argument("-i", "--input", required=True, help="DIMACS .col graph file")
    p.add_argument("-o", "--output", required=True, help="instance file to write")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("decide", help="solve an instance file")
    p.add_argument("-i", "--input", required=True, help="instance file")
    p.add_argument(
        "--mode",
        choices=[MODE_EXACT_FULL, MODE_EXACT_STRUCTURED, MODE_GREEDY],
        default=MODE_EXACT_STRUCTURED,
    )
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="check colorability against the threshold decision")
    p.add_argument("-i", "--input", required=True, help="DIMACS .col graph file")
    p.add_argument("--mode", choices=["full", "structured"], default="structured")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-lemmas", help="run the exact bound checks on a graph")
    p.add_argument("-i", "--input", required=True, help="DIMACS .col graph file")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=cmd_check_lemmas)

    p = sub.add_parser("color", help="run the three-coloring oracle")
    p.add_argument("-i", "--input", required=True, help="DIMACS .col graph file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("gen-corpus", help="write the standard test graphs")
    p.add_argument("-o", "--output", required=True, help="directory for .col files")
    p.add_argument("--seed", type=int, default=1, help="first seed for the random graphs")
    p.set_defaults(func=cmd_gen_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CombinatorialBlowupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CssplabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
