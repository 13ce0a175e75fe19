"""Command-line front end: expression parser, evaluator and subcommands."""

from .evaluator import EvalError, evaluate, evaluate_text
from .main import main
from .parser import ParseError, parse, render
from .verify import VerifyReport, run_verify
