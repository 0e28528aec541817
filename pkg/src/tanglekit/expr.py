"""
Tangle expression language.

Grammar (infix operators share one precedence level and associate to the
left; postfix operators bind tightest)::

    expr    := postfix (INFIX postfix)*
    postfix := primary POSTFIX*
    primary := "t1" | "t2" | "I" | NAME | "(" expr ")"
             | "h" "(" int ")" | "v" "(" int ")" | "J" "(" int "," int "," int "," int ")"
             | "fill" "(" expr ";" expr ("," expr)* ")" | "num" "(" expr ")" | "den" "(" expr ")"
    INFIX   := "+h" | "+v" | ".+h" | ".+v" | "o"
    POSTFIX := "*" | "-" | "r1" | "r2" | "R" | "hf" | "vf"

``.+h`` and ``.+v`` are the inner connect sums; the operand order selects the
first or second variant, exactly like the outer sums. Names are resolved
against an environment at elaboration time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .diagram import build as B
from .diagram.core import Diagram
from .errors import ExprSyntaxError, ExprTypeError

__all__ = [
    "TangleExpr",
    "Atom",
    "Name",
    "HTwist",
    "VTwist",
    "JTangle",
    "Postfix",
    "Infix",
    "Fill",
    "Closure",
    "parse_expr",
    "to_source",
    "elaborate",
    "evaluate",
]


@dataclass(frozen=True)
class Atom:
    """``t1``, ``t2`` or ``I``."""

    name: str


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class HTwist:
    p: int


@dataclass(frozen=True)
class VTwist:
    q: int


@dataclass(frozen=True)
class JTangle:
    ps: tuple[int, int, int, int]


@dataclass(frozen=True)
class Postfix:
    op: str
    arg: "TangleExpr"


@dataclass(frozen=True)
class Infix:
    op: str
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Fill:
    target: "TangleExpr"
    fills: tuple["TangleExpr", ...]


@dataclass(frozen=True)
class Closure:
    kind: str  # "num" or "den"
    arg: "TangleExpr"


TangleExpr = Union[Atom, Name, HTwist, VTwist, JTangle, Postfix, Infix, Fill, Closure]

INFIX_OPS = ("+h", "+v", ".+h", ".+v", "o")
POSTFIX_SYMBOLS = ("*", "-")
POSTFIX_WORDS = ("r1", "r2", "R", "hf", "vf")
_RESERVED = {"t1", "t2", "I", "h", "v", "J", "fill", "num", "den", "o"} | set(POSTFIX_WORDS)

# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<op>\.\+[hv]|\+[hv])|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[()*,;\-])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _lex(src: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if not m:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "ws":
            for k, ch in enumerate(text):
                if ch == "\n":
                    line += 1
                    line_start = pos + k + 1
        else:
            toks.append(_Tok(kind, text, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, src: str):
        self.toks = _lex(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ExprSyntaxError(f"{msg}, found {found}", tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        if self.peek().text != text or self.peek().kind == "eof":
            self.error(f"expected {text!r}")
        return self.take()

    def parse(self) -> TangleExpr:
        e = self.expr()
        if self.peek().kind != "eof":
            self.error("expected an operator or end of input")
        return e

    def expr(self) -> TangleExpr:
        left = self.postfix()
        while True:
            t = self.peek()
            if t.kind == "op" or (t.kind == "ident" and t.text == "o"):
                self.take()
                left = Infix(t.text, left, self.postfix())
            else:
                return left

    def postfix(self) -> TangleExpr:
        e = self.primary()
        while True:
            t = self.peek()
            if (t.kind == "sym" and t.text in POSTFIX_SYMBOLS) or (
                t.kind == "ident" and t.text in POSTFIX_WORDS
            ):
                self.take()
                e = Postfix(t.text, e)
            else:
                return e

    def integer(self) -> int:
        sign = 1
        if self.peek().text == "-":
            self.take()
            sign = -1
        t = self.peek()
        if t.kind != "int":
            self.error("expected an integer")
        self.take()
        return sign * int(t.text)

    def primary(self) -> TangleExpr:
        t = self.peek()
        if t.kind == "sym" and t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "ident":
            self.error("expected a tangle")
        self.take()
        name = t.text
        if name in ("t1", "t2", "I"):
            return Atom(name)
        if name in ("h", "v"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return HTwist(n) if name == "h" else VTwist(n)
        if name == "J":
            self.expect("(")
            ps = [self.integer()]
            for _ in range(3):
                self.expect(",")
                ps.append(self.integer())
            self.expect(")")
            return JTangle(tuple(ps))
        if name == "fill":
            self.expect("(")
            target = self.expr()
            self.expect(";")
            fills = [self.expr()]
            while self.peek().text == ",":
                self.take()
                fills.append(self.expr())
            self.expect(")")
            return Fill(target, tuple(fills))
        if name in ("num", "den"):
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Closure(name, e)
        if name in _RESERVED:
            self.error("misplaced keyword", t)
        return Name(name)


def parse_expr(src: str) -> TangleExpr:
    """Parse DSL text into an expression tree.

    Raises:
        ExprSyntaxError: with 1-based line and column of the offending token.
    """
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# printer


def to_source(e: TangleExpr) -> str:
    """Canonical text; ``parse_expr(to_source(e)) == e``."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, HTwist):
        return f"h({e.p})"
    if isinstance(e, VTwist):
        return f"v({e.q})"
    if isinstance(e, JTangle):
        return "J(" + ",".join(str(p) for p in e.ps) + ")"
    if isinstance(e, Postfix):
        inner = to_source(e.arg)
        if isinstance(e.arg, Infix):
            inner = f"({inner})"
        return inner + (e.op if e.op in POSTFIX_SYMBOLS else " " + e.op)
    if isinstance(e, Infix):
        right = to_source(e.right)
        if isinstance(e.right, Infix):
            right = f"({right})"
        return f"{to_source(e.left)} {e.op} {right}"
    if isinstance(e, Fill):
        return f"fill({to_source(e.target)}; " + ", ".join(to_source(f) for f in e.fills) + ")"
    if isinstance(e, Closure):
        return f"{e.kind}({to_source(e.arg)})"
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------------------
# elaboration

_SHAPE = {0: "link", 1: "ball tangle", 2: "spherical tangle"}


def _shape(d: Diagram) -> str:
    return _SHAPE.get(d.boundaries, f"{d.boundaries - 1}-punctured tangle")


def _need(d: Diagram, ok: bool, what: str) -> None:
    if not ok:
        raise ExprTypeError(f"{what} cannot take a {_shape(d)}")


def elaborate(e: TangleExpr, env: Mapping[str, Diagram] | None = None) -> Diagram:
    """Build the diagram an expression denotes.

    Args:
        e: expression tree.
        env: diagrams bound to names.

    Raises:
        ExprTypeError: an operator received operands of the wrong shape, or a
            name is unbound.
    """
    env = env or {}
    if isinstance(e, Atom):
        return {"t1": lambda: B.fundamental_tangle(1), "t2": lambda: B.fundamental_tangle(2),
                "I": B.identity_spherical}[e.name]()
    if isinstance(e, Name):
        if e.ident not in env:
            raise ExprTypeError(f"unbound name {e.ident!r}")
        return env[e.ident]
    if isinstance(e, HTwist):
        return B.htwist(e.p)
    if isinstance(e, VTwist):
        return B.vtwist(e.q)
    if isinstance(e, JTangle):
        return B.build_J(*e.ps)
    if isinstance(e, Postfix):
        d = elaborate(e.arg, env)
        if e.op == "*":
            return B.mirror(d)
        if e.op == "R":
            _need(d, d.boundaries >= 1, "R")
            return B.rotate_r(d)
        if e.op in ("hf", "vf"):
            _need(d, d.boundaries >= 1, e.op)
            return B.hflip(d) if e.op == "hf" else B.vflip(d)
        _need(d, d.boundaries == 2, e.op)
        return {"-": B.swap, "r1": B.r1, "r2": B.r2}[e.op](d)
    if isinstance(e, Infix):
        a, b = elaborate(e.left, env), elaborate(e.right, env)
        if e.op in ("+h", "+v"):
            for d in (a, b):
                _need(d, d.boundaries >= 1, e.op)
            return B.connect_h(a, b) if e.op == "+h" else B.connect_v(a, b)
        if e.op in (".+h", ".+v"):
            which = e.op[-1]
            if a.boundaries == 1 and b.boundaries == 2:
                return B.inner_sum(a, b, which, side=1)
            if a.boundaries == 2 and b.boundaries == 1:
                return B.inner_sum(b, a, which, side=2)
            raise ExprTypeError(f"{e.op} needs one ball tangle and one spherical tangle, "
                                f"got a {_shape(a)} and a {_shape(b)}")
        if e.op == "o":
            if a.boundaries != 2 or b.boundaries != 2:
                raise ExprTypeError(f"o composes spherical tangles, got a {_shape(a)} "
                                    f"and a {_shape(b)}")
            return B.compose_spherical(a, b)
    if isinstance(e, Fill):
        t = elaborate(e.target, env)
        fills = [elaborate(f, env) for f in e.fills]
        if t.boundaries - 1 != len(fills):
            raise ExprTypeError(f"fill: {_shape(t)} has {max(t.boundaries - 1, 0)} holes "
                                f"but {len(fills)} fills were given")
        for f in fills:
            _need(f, f.boundaries >= 1, "fill")
        return B.fill_hole(t, fills)
    if isinstance(e, Closure):
        d = elaborate(e.arg, env)
        _need(d, d.boundaries == 1, e.kind)
        return B.numerator_closure(d) if e.kind == "num" else B.denominator_closure(d)
    raise TypeError(f"not an expression: {e!r}")


def evaluate(src: str, env: Mapping[str, Diagram] | None = None) -> Diagram:
    """Parse and elaborate in one step."""
    return elaborate(parse_expr(src), env)
