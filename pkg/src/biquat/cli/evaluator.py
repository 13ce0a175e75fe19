"""Evaluate parsed expressions to biquaternions."""

from __future__ import annotations

from typing import Callable, Dict

from .. import conjugates, geom, metric
from ..core import I, UNIT_I, UNIT_J, UNIT_K, Biquaternion, inverse, multiply
from ..errors import BiquaternionError
from ..representations import exp
from .parser import BinOp, Call, Expr, Group, Neg, Num, Pow, Span, Unit, parse

UNIT_VALUES = {"i": UNIT_I, "j": UNIT_J, "k": UNIT_K, "I": I}


class EvalError(Exception):
    """A library error raised while evaluating a subexpression.

    ``cause`` is the original exception, ``span`` the 0-based character
    range of the offending subexpression.
    """

    def __init__(self, cause: Exception, span: Span, source: str = ""):
        self.cause = cause
        self.span = span
        self.source = source
        super().__init__(self.describe())

    @property
    def name(self) -> str:
        return type(self.cause).__name__

    @property
    def condition(self) -> str:
        return getattr(self.cause, "condition", str(self.cause))

    def describe(self) -> str:
        start, end = self.span
        where = f"columns {start + 1}-{end}"
        if self.source:
            where += f" ({self.source[start:end]!r})"
        detail = str(self.cause)
        text = f"{self.name} at {where}: {self.condition}"
        if detail and detail != self.condition:
            text += f" [{detail}]"
        return text


def _scalar(c: complex) -> Biquaternion:
    return Biquaternion(complex(c))


FUNCTIONS: Dict[str, Callable[..., Biquaternion]] = {
    "conj": conjugates.quat_conjugate,
    "cconj": conjugates.complex_conjugate,
    "bconj": conjugates.total_conjugate,
    "inner": lambda p, q: _scalar(metric.inner_product(p, q)),
    "wedge": geom.wedge,
    "dual": geom.dual,
    "exp": exp,
    "norm": lambda q: _scalar(metric.semi_norm(q)),
    "modulus": lambda q: _scalar(metric.modulus(q)),
    "realnorm": lambda q: _scalar(metric.real_norm(q)),
    "scalar": lambda q: _scalar(q.w),
    "vector": lambda q: q.vector_part,
    "re": lambda q: q.real.to_biquaternion(),
    "im": lambda q: q.imag.to_biquaternion(),
    "gscalar": lambda q: geom.grade_part(q, geom.Grade.S),
    "gbivector": lambda q: geom.grade_part(q, geom.Grade.B),
    "gvector": lambda q: geom.grade_part(q, geom.Grade.V),
    "gpseudo": lambda q: geom.grade_part(q, geom.Grade.P),
    "ldiv": lambda a, b: multiply(inverse(a), b),
    "inv": inverse,
}


def _apply(node: Expr, source: str) -> Biquaternion:
    if isinstance(node, Num):
        return Biquaternion(node.value)
    if isinstance(node, Unit):
        return UNIT_VALUES[node.name]
    if isinstance(node, Group):
        return evaluate(node.inner, source)
    if isinstance(node, Neg):
        return -evaluate(node.operand, source)
    if isinstance(node, Pow):
        return evaluate(node.base, source) ** node.exponent
    if isinstance(node, Call):
        args = [evaluate(a, source) for a in node.args]
        return FUNCTIONS[node.name](*args)
    if isinstance(node, BinOp):
        left = evaluate(node.left, source)
        right = evaluate(node.right, source)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "/":
            try:
                return multiply(left, inverse(right))
            except BiquaternionError as exc:
                # blame the divisor, not the whole quotient
                raise EvalError(exc, node.right.span, source) from exc
        return multiply(left, right)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Expr, source: str = "") -> Biquaternion:
    """Value of ``node``; library errors are wrapped with the node's span."""
    try:
        return _apply(node, source)
    except EvalError:
        raise
    except (BiquaternionError, OverflowError, ZeroDivisionError) as exc:
        raise EvalError(exc, node.span, source) from exc


def evaluate_text(text: str) -> Biquaternion:
    return evaluate(parse(text), text)
