"""Lexer, recursive-descent parser and pretty-printer for biquaternion expressions.

Grammar, loosest binding first::

    sum   := quot (('+' | '-') quot)*
    quot  := prod ('/' prod)*
    prod  := juxt ('*' juxt)*
    juxt  := unary (unit ('^' int)?)*     # only after a number, unit or (...)
    unary := '-' unary | power
    power := atom ('^' ['-'] int)?
    atom  := number | unit | ident '(' sum (',' sum)* ')' | '(' sum ')'
    unit  := 'i' | 'j' | 'k' | 'I'

So ``^`` binds tightest, then unary minus, juxtaposition (``2Ii`` is
``2 * I * i``), explicit ``*``, ``/`` and finally ``+``/``-``.  All binary
operators are left-associative; ``*`` is non-commutative and ``a / b`` means
``a * b^-1``.  A run of the letters ``i j k I`` that is not a function name
is read as juxtaposed units, so ``Ij`` is ``I * j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from ..core import format_real

UNITS = ("i", "j", "k", "I")

FUNCTIONS = {
    "conj": 1, "cconj": 1, "bconj": 1, "inner": 2, "wedge": 2, "dual": 1, "exp": 1,
    "norm": 1, "modulus": 1, "realnorm": 1, "scalar": 1, "vector": 1, "re": 1, "im": 1,
    "gscalar": 1, "gbivector": 1, "gvector": 1, "gpseudo": 1, "ldiv": 2, "inv": 1,
}

Span = Tuple[int, int]


class ParseError(Exception):
    """Syntax error at a 1-based ``column`` with the set of acceptable tokens."""

    def __init__(self, message: str, column: int, expected: Tuple[str, ...] = ()):
        self.message = message
        self.column = column
        self.expected = tuple(sorted(expected))
        detail = f"; expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"syntax error at column {column}: {message}{detail}")


# --- AST ----------------------------------------------------------------
# Spans are 0-based half-open character ranges and do not take part in
# equality, so trees compare structurally.


@dataclass(frozen=True)
class Num:
    value: float
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Unit:
    name: str
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / and "juxt"
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Group:
    inner: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


Expr = Union[Num, Unit, Neg, BinOp, Pow, Call, Group]


# --- lexer --------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, INT, UNIT, IDENT, OP, END
    text: str
    pos: int


_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPS = "+-*/^(),"


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m:
            kind = "INT" if m.group(0).isdigit() else "NUM"
            tokens.append(Token(kind, m.group(0), pos))
            pos = m.end()
            continue
        m = _WORD.match(text, pos)
        if m:
            word = m.group(0)
            if word in FUNCTIONS:
                tokens.append(Token("IDENT", word, pos))
            elif all(c in UNITS for c in word):
                tokens.extend(Token("UNIT", c, pos + n) for n, c in enumerate(word))
            else:
                raise ParseError(f"unknown identifier {word!r}", pos + 1,
                                 tuple(FUNCTIONS) + UNITS)
            pos = m.end()
            continue
        if ch in _OPS:
            tokens.append(Token("OP", ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos + 1)
    tokens.append(Token("END", "", len(text)))
    return tokens


# --- parser -------------------------------------------------------------

_ATOM_START = ("number", "unit", "function", "'('")


def _juxtaposable(node: Expr) -> bool:
    if isinstance(node, (Num, Unit, Group)):
        return True
    if isinstance(node, Pow):
        return _juxtaposable(node.base)
    if isinstance(node, Neg):
        return _juxtaposable(node.operand)
    return isinstance(node, BinOp) and node.op == "juxt"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def fail(self, expected: Tuple[str, ...], message: Optional[str] = None):
        t = self.tok
        found = "end of input" if t.kind == "END" else repr(t.text)
        raise ParseError(message or f"unexpected {found}", t.pos + 1, expected)

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail((f"'{op}'",))
        return self.advance()

    def parse(self) -> Expr:
        node = self.sum()
        if self.tok.kind != "END":
            expected = ["'+'", "'-'", "'*'", "'/'", "end of input"]
            if self.tok.kind == "UNIT" and not _juxtaposable(node):
                self.fail(tuple(expected), "a unit can only follow a number, a unit or a parenthesized group")
            if self.at_op(")"):
                self.fail(tuple(expected), "unbalanced ')'")
            self.fail(tuple(expected))
        return node

    def sum(self) -> Expr:
        node = self.quot()
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.quot()
            node = BinOp(op, node, right, (node.span[0], right.span[1]))
        return node

    def quot(self) -> Expr:
        node = self.prod()
        while self.at_op("/"):
            self.advance()
            right = self.prod()
            node = BinOp("/", node, right, (node.span[0], right.span[1]))
        return node

    def prod(self) -> Expr:
        node = self.juxt()
        while self.at_op("*"):
            self.advance()
            right = self.juxt()
            node = BinOp("*", node, right, (node.span[0], right.span[1]))
        return node

    def juxt(self) -> Expr:
        node = self.unary()
        while self.tok.kind == "UNIT" and _juxtaposable(node):
            t = self.advance()
            right: Expr = Unit(t.text, (t.pos, t.pos + 1))
            if self.at_op("^"):
                right = self.exponent(right)
            node = BinOp("juxt", node, right, (node.span[0], right.span[1]))
        return node

    def unary(self) -> Expr:
        if self.at_op("-"):
            start = self.advance().pos
            operand = self.unary()
            return Neg(operand, (start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.at_op("^"):
            node = self.exponent(node)
        return node

    def exponent(self, base: Expr) -> Pow:
        self.advance()
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "INT":
            self.fail(("integer",), "exponent must be an integer literal")
        t = self.advance()
        return Pow(base, sign * int(t.text), (base.span[0], t.pos + len(t.text)))

    def atom(self) -> Expr:
        t = self.tok
        if t.kind in ("NUM", "INT"):
            self.advance()
            return Num(float(t.text), (t.pos, t.pos + len(t.text)))
        if t.kind == "UNIT":
            self.advance()
            return Unit(t.text, (t.pos, t.pos + 1))
        if t.kind == "IDENT":
            self.advance()
            self.expect_op("(")
            args = [self.sum()]
            while self.at_op(","):
                self.advance()
                args.append(self.sum())
            end = self.expect_op(")")
            arity = FUNCTIONS[t.text]
            if len(args) != arity:
                raise ParseError(f"{t.text} takes {arity} argument{'s' if arity > 1 else ''}, "
                                 f"got {len(args)}", t.pos + 1)
            return Call(t.text, tuple(args), (t.pos, end.pos + 1))
        if self.at_op("("):
            start = self.advance().pos
            inner = self.sum()
            end = self.expect_op(")")
            return Group(inner, (start, end.pos + 1))
        self.fail(_ATOM_START + ("'-'",))


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# --- pretty-printer -----------------------------------------------------

_BIN_FORMAT = {"+": "{} + {}", "-": "{} - {}", "*": "{} * {}", "/": "{} / {}", "juxt": "{}{}"}


def render(node: Expr) -> str:
    """Print a tree; parenthesized groups are explicit ``Group`` nodes."""
    if isinstance(node, Num):
        return format_real(node.value)
    if isinstance(node, Unit):
        return node.name
    if isinstance(node, Neg):
        return "-" + render(node.operand)
    if isinstance(node, BinOp):
        return _BIN_FORMAT[node.op].format(render(node.left), render(node.right))
    if isinstance(node, Pow):
        return f"{render(node.base)}^{node.exponent}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(render(a) for a in node.args)})"
    if isinstance(node, Group):
        return f"({render(node.inner)})"
    raise TypeError(f"not an expression node: {node!r}")


# binding level of each construct, loosest first
_LEVEL = {"+": 1, "-": 1, "/": 2, "*": 3, "juxt": 4}
_UNARY, _POWER, _ATOM = 5, 6, 7


def _level(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _LEVEL[node.op]
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POWER
    return _ATOM


def _at_least(node: Expr, level: int) -> Expr:
    return node if _level(node) >= level else Group(node)


def parenthesize(node: Expr) -> Expr:
    """Insert the ``Group`` nodes needed for ``parse(render(node)) == node``.

    A juxtaposition's right operand must be a unit or a power of one.
    """
    if isinstance(node, (Num, Unit)):
        return node
    if isinstance(node, Group):
        return Group(parenthesize(node.inner))
    if isinstance(node, Call):
        return Call(node.name, tuple(parenthesize(a) for a in node.args))
    if isinstance(node, Neg):
        return Neg(_at_least(parenthesize(node.operand), _UNARY))
    if isinstance(node, Pow):
        base = parenthesize(node.base)
        if isinstance(base, Num) and base.value < 0:
            base = Group(base)
        return Pow(_at_least(base, _ATOM), node.exponent)
    if isinstance(node, BinOp):
        level = _LEVEL[node.op]
        left = _at_least(parenthesize(node.left), level)
        right = parenthesize(node.right)
        if node.op == "juxt":
            if not (isinstance(right, Unit) or (isinstance(right, Pow) and isinstance(right.base, Unit))):
                raise ValueError("juxtaposition needs a unit (or unit power) on the right")
            if not _juxtaposable(left):
                left = Group(left)
        else:
            right = _at_least(right, level + 1)
        return BinOp(node.op, left, right)
    raise TypeError(f"not an expression node: {node!r}")


def strip_groups(node: Expr) -> Expr:
    """The same tree with every ``Group`` removed (semantic comparison)."""
    if isinstance(node, Group):
        return strip_groups(node.inner)
    if isinstance(node, Neg):
        return Neg(strip_groups(node.operand))
    if isinstance(node, BinOp):
        return BinOp(node.op, strip_groups(node.left), strip_groups(node.right))
    if isinstance(node, Pow):
        return Pow(strip_groups(node.base), node.exponent)
    if isinstance(node, Call):
        return Call(node.name, tuple(strip_groups(a) for a in node.args))
    return node
