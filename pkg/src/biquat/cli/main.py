"""``biquat`` command-line entry point.

Exit codes: 0 success, 1 evaluation or domain error, 2 syntax error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from ..errors import BiquaternionError
from . import commands
from .evaluator import EvalError, evaluate
from .parser import ParseError, parse
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TOL, run_verify

EXIT_OK, EXIT_EVAL, EXIT_SYNTAX, EXIT_VERIFY = 0, 1, 2, 3


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="biquat", description="Biquaternion calculator and checker.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", help="flat JSON: eight reals plus classification")

    p = sub.add_parser("classify", help="classify the value of an expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("repr", help="print a representation of the value")
    p.add_argument("expr")
    p.add_argument("--form", choices=commands.FORMS, default="cartesian")

    p = sub.add_parser("tables", help="print the basis or grade multiplication table")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--basis", action="store_true")
    which.add_argument("--grades", action="store_true")

    p = sub.add_parser("verify", help="run the seeded identity checks")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--workers", type=int, default=1, help="processes to spread samples over")
    p.add_argument("--json", action="store_true")
    return ap


def _show_syntax_error(text: str, err: ParseError) -> None:
    print(f"error: {err}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print(f"  {' ' * (err.column - 1)}^", file=sys.stderr)


def _expression_command(args) -> int:
    text = args.expr
    try:
        value = evaluate(parse(text), text)
        if args.command == "eval":
            print(commands.json_summary(value) if args.json else value)
        elif args.command == "classify":
            print(commands.json_summary(value) if args.json else commands.render_classification(value))
        else:
            print(commands.render_form(value, args.form))
    except ParseError as err:
        _show_syntax_error(text, err)
        return EXIT_SYNTAX
    except EvalError as err:
        print(f"error: {err.describe()}", file=sys.stderr)
        return EXIT_EVAL
    except BiquaternionError as err:
        # raised by the representation or classification step on the final value
        print(f"error: {type(err).__name__}: {err.condition}", file=sys.stderr)
        if str(err) != err.condition:
            print(f"  {err}", file=sys.stderr)
        return EXIT_EVAL
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command in ("eval", "classify", "repr"):
        return _expression_command(args)
    if args.command == "tables":
        print(commands.render_basis_table() if args.basis else commands.render_grade_table())
        return EXIT_OK
    report = run_verify(args.seed, args.samples, args.tol, args.workers)
    print(report.to_json() if args.json else report.to_text())
    # timing varies between runs, so it stays off stdout
    print(f"wall time: {report.wall_time:.2f} s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
