"""``dgseries`` command line: solve, verify, convert, eval.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .dfinite import operator_to_recurrence, recurrence_to_annihilator
from .exact import format_rational, parse_rational
from .funceq import THEOREMS, verify_functional_equation
from .jsonio import FormatError
from .recurrence import solve_cauchy
from .series import eval_series

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _ints(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rationals(text: str) -> tuple:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _forms(text: str) -> tuple:
    letters = [c for c in text.replace(",", "").upper()]
    if not letters or any(c not in "ABC" for c in letters):
        raise argparse.ArgumentTypeError(f"forms must be letters from a, b, c, got {text!r}")
    return tuple(dict.fromkeys(letters))


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_problem(path):
    doc = jsonio.load(path)
    if jsonio.kind_of(doc) != "problem":
        raise InputError(f"{path}: expected a problem document")
    return jsonio.problem_from_dict(doc)


def _default_window(problem) -> tuple:
    return tuple(4 * (k + 1) for k in problem.equation.m)


def _window(args, problem) -> tuple:
    window = args.window if args.window is not None else _default_window(problem)
    if len(window) != problem.dim:
        raise InputError(f"window {window} does not match dimension {problem.dim}")
    return window


def cmd_solve(args) -> int:
    problem = _load_problem(args.problem)
    F = solve_cauchy(problem, _window(args, problem))
    _emit(jsonio.dumps(jsonio.series_to_dict(F)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = _load_problem(args.problem)
    report = verify_functional_equation(problem, _window(args, problem), args.theorem, args.forms)
    _emit(jsonio.dumps(report.to_dict()), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_convert(args) -> int:
    doc = jsonio.load(args.input)
    kind = jsonio.kind_of(doc)
    if args.direction == "to-operator":
        if kind != "problem":
            raise InputError(f"{args.input}: to-operator needs a problem or equation, got {kind}")
        eq, ell = jsonio.equation_from_dict(doc)
        op = recurrence_to_annihilator(eq.to_forward(), ell)
        _emit(jsonio.dumps(jsonio.operator_to_dict(op)), args.out)
    else:
        if kind != "operator":
            raise InputError(f"{args.input}: to-recurrence needs an operator, got {kind}")
        op = jsonio.operator_from_dict(doc)
        eq = operator_to_recurrence(op)
        _emit(jsonio.dumps(jsonio.equation_to_dict(eq, op.ell)), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    doc = jsonio.load(args.series)
    if jsonio.kind_of(doc) != "series":
        raise InputError(f"{args.series}: expected a series document")
    F = jsonio.series_from_dict(doc)
    if len(args.xi) != F.dim or len(args.z) != F.dim:
        raise InputError(f"xi and z need {F.dim} components each")
    _emit(format_rational(eval_series(F, args.xi, args.z)) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgseries",
        description="Discrete generating series of solutions to linear difference equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a Cauchy problem on a window")
    p.add_argument("-p", "--problem", required=True)
    p.add_argument("-w", "--window", type=_ints, help="comma-separated; default 4*(m+1)")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a functional equation coefficient-exactly")
    p.add_argument("-p", "--problem", required=True)
    p.add_argument("-w", "--window", type=_ints)
    p.add_argument("--theorem", choices=THEOREMS, default="auto")
    p.add_argument("--forms", type=_forms, default=("A", "B", "C"), help="subset of abc")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="recurrence <-> annihilating operator")
    p.add_argument("direction", choices=("to-operator", "to-recurrence"))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("eval", help="evaluate a series at (xi, z)")
    p.add_argument("-s", "--series", required=True)
    p.add_argument("--xi", type=_rationals, required=True)
    p.add_argument("--z", type=_rationals, required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, ValueError, NotImplementedError, OSError) as exc:
        print(f"dgseries: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
