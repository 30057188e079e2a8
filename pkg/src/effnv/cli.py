"""Command-line entry point.

Exit status: 0 when everything checks out, 1 when a check fails or a
hypothesis is violated, 2 on malformed input (argparse also uses 2).
"""

from __future__ import annotations

import argparse
import sys

from . import commands
from .dual_graph import format_graph, read_graph
from .errors import EffnvError, InputError
from .exact_arith import parse_rational
from .picard_lab import execute, extract_dual_graph, read_program
from .report import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="effnv",
        description="Exact checks for discrepancies, pluri-anticanonical Euler "
        "characteristics and singular Riemann-Roch bounds on log del Pezzo surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("verify-paper", parents=[common], help="rebuild the counterexample surface and check every value")

    p = sub.add_parser("check", parents=[common], help="negative definiteness, fundamental cycles, ADE type")
    p.add_argument("graph")

    p = sub.add_parser("discrepancy", parents=[common], help="solve for discrepancies")
    p.add_argument("graph")
    p.add_argument("--ky2", type=int, help="K_Y^2 of the resolution; enables K_S^2")

    for name, helptext in (("chi", "table of chi(-nK)"), ("tau", "smallest n with chi(-nK) > 0")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("graph")
        p.add_argument("--ky2", type=int, required=True)
        p.add_argument("--chi-oy", type=int, default=1)
        if name == "chi":
            p.add_argument("--n-max", type=int, default=10)
            p.add_argument("--assume-vanishing", action="store_true", help="label the column h0 instead of chi")
            p.add_argument("--debug", action="store_true", help="print the rounded and fractional divisors")
        else:
            p.add_argument("--cap", type=int, default=10)

    p = sub.add_parser("lab", help="Picard lattice blow-up lab")
    labsub = p.add_subparsers(dest="lab_command", required=True, metavar="LAB_COMMAND")
    q = labsub.add_parser("run", parents=[common], help="execute a blow-up program file")
    q.add_argument("program")
    q.add_argument("--graph-out", help="also write the extracted dual graph to this file")
    labsub.add_parser("example7", parents=[common], help="run the builtin counterexample program and diff it")

    p = sub.add_parser("contribution", parents=[common], help="c_p for a point of type i(1/r(1,-1))")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("bound", parents=[common], help="worst-case contribution of an ADE point")
    p.add_argument("--type", dest="ade_type", required=True)

    sub.add_parser("verify-thm9", parents=[common], help="check the -3/2 bound over all 27 baskets")

    p = sub.add_parser("h0-bound", parents=[common], help="lower bound for h0 of a nef and big Weil divisor")
    p.add_argument("--d2", type=_rational, required=True)
    p.add_argument("--basket", required=True)
    return parser


def run(args: argparse.Namespace):
    cmd = args.command
    if cmd == "verify-paper":
        return commands.report_verify_paper()
    if cmd == "check":
        return commands.report_check(read_graph(args.graph))
    if cmd == "discrepancy":
        return commands.report_discrepancy(read_graph(args.graph), args.ky2)
    if cmd == "chi":
        return commands.report_chi(
            read_graph(args.graph), args.ky2, args.chi_oy, args.n_max, args.assume_vanishing, args.debug
        )
    if cmd == "tau":
        return commands.report_tau(read_graph(args.graph), args.ky2, args.chi_oy, args.cap)
    if cmd == "lab":
        if args.lab_command == "example7":
            return commands.report_lab_example7()
        program = read_program(args.program)
        report = commands.report_lab_run(program)
        if args.graph_out:
            graph = extract_dual_graph(execute(program), program.contracted)
            with open(args.graph_out, "w", encoding="utf-8") as fh:
                fh.write(format_graph(graph))
        return report
    if cmd == "contribution":
        return commands.report_contribution(args.r, args.i)
    if cmd == "bound":
        return commands.report_bound(args.ade_type)
    if cmd == "verify-thm9":
        return commands.report_verify_thm9()
    if cmd == "h0-bound":
        return commands.report_h0_bound(args.d2, args.basket)
    raise InputError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except EffnvError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(report.render_json() if args.json else report.render_text())
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
