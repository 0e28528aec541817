"""
Realize any element of PM_2 as the invariant f of a ball tangle.

For ``0 < a < b`` the Euclidean algorithm drives the construction
``[b;a] = [q1;1] +h [r1;a]`` where ``[r1;a] = ([a;r1]^R)^*``. All other
targets reduce to that case, or to a few explicit base tangles, through
``[p;q]^* = [p;-q]`` and ``[p;q]^R = [q;-p]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram.core import Diagram
from .expr import Atom, HTwist, Infix, Postfix, TangleExpr, VTwist, elaborate
from .phi import ProjMatrix

__all__ = ["EuclidTrace", "euclid", "synth_expr", "synth_ball"]


@dataclass(frozen=True)
class EuclidTrace:
    """Quotients ``q_1..q_{k+1}`` and remainders ``r_0 = a, ..., r_{k+1} = 0``."""

    a: int
    b: int
    quotients: tuple[int, ...]
    remainders: tuple[int, ...]

    @property
    def gcd(self) -> int:
        return self.remainders[-2]


def euclid(a: int, b: int) -> EuclidTrace:
    """Euclidean algorithm trace for ``0 < a < b``."""
    if not 0 < a < b:
        raise ValueError(f"euclid needs 0 < a < b, got a={a}, b={b}")
    quotients = []
    remainders = [a]
    x, y = b, a
    while y:
        q, r = divmod(x, y)
        quotients.append(q)
        remainders.append(r)
        x, y = y, r
    return EuclidTrace(a, b, tuple(quotients), tuple(remainders))


_T1 = Atom("t1")


def _plus_h(x: TangleExpr, y: TangleExpr) -> TangleExpr:
    return Infix("+h", x, y)


def _rstar(x: TangleExpr) -> TangleExpr:
    return Postfix("*", Postfix("R", x))


def _coprime_step(b: int, a: int) -> TangleExpr:
    """Expression with invariant ``[b;a]`` for ``0 <= a <= b``."""
    if b == 0:
        return _plus_h(_T1, _T1)
    if a == 0:
        return _T1 if b == 1 else _plus_h(VTwist(b), _T1)
    if a == 1:
        return HTwist(b)
    if a == b:
        # [1;1] +h [0;b] where [0;b] = [b;0]^R
        return _plus_h(HTwist(1), Postfix("R", _coprime_step(b, 0)))
    q, r = divmod(b, a)
    # [b;a] = [q;1] +h [r;a] and [r;a] = ([a;r]^R)^*
    return _plus_h(HTwist(q), _rstar(_coprime_step(a, r)))


def synth_expr(p: int, q: int) -> TangleExpr:
    """Expression whose ball tangle has ``f = [p;q]`` (up to global sign)."""
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    if q < 0:
        return Postfix("*", synth_expr(p, -q))
    if q > p:
        # [p;q] = [q;-p]^R and [q;-p] = [q;p]^*
        return Postfix("R", Postfix("*", synth_expr(q, p)))
    return _coprime_step(p, q)


def synth_ball(target) -> tuple[Diagram, TangleExpr]:
    """Build a ball tangle realizing ``target``.

    Args:
        target: a 2x1 :class:`ProjMatrix` or a pair ``(p, q)``.

    Returns:
        The diagram and the expression it was elaborated from.
    """
    if isinstance(target, ProjMatrix):
        p, q = target.col(0)
    else:
        p, q = target
    expr = synth_expr(int(p), int(q))
    return elaborate(expr), expr
