"""
The invariants f (ball tangles) and F^n (n-punctured tangles).

For a ball tangle ``B`` the pair ``(<N(B)>, i<D(B)>)`` of closure brackets is
a common root of unity times an integer vector; dividing that root out and
forgetting the global sign gives ``f(B)`` in PM_2. For a tangle with ``n``
holes, column ``j`` collects the closures of the tangle with its holes filled
by the fundamental tangles listed in the j-th multi-index, weighted by
``(-i)^t_j`` where ``t_j`` counts the horizontal fills.

The matrix-level formulas for the symmetry operations and connect sums live
here as well, together with the divisibility and determinant obstructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bracket import bracket
from .diagram.build import denominator_closure, fill_hole, fundamental_tangle, numerator_closure
from .diagram.core import Diagram
from .errors import BoundaryMismatch, PhaseIncoherence, ShapeError
from .phi import (
    I_UNIT,
    MINUS_I,
    MultiIndex,
    PhiScalar,
    ProjMatrix,
    det2,
    gcd_list,
    phi_mul,
    proj_matmul,
    xi_proj,
)

__all__ = [
    "BallInvariant",
    "PuncturedInvariant",
    "normalize",
    "closure_brackets",
    "inv_f",
    "inv_Fn",
    "inv_F",
    "compose_law_check",
    "krebes_check",
    "mat_star",
    "mat_minus",
    "mat_r1",
    "mat_r2",
    "mat_R",
    "mat_sum",
    "mat_sum_h",
    "mat_sum_v",
    "mat_inner_h",
    "mat_inner_v",
    "bt_sum_h",
    "bt_sum_v",
    "bt_star",
    "bt_R",
    "j_formula",
    "det_residue",
    "delta_congruence_check",
    "is_square",
]


@dataclass(frozen=True)
class BallInvariant:
    """``f(B)`` as a 2x1 projective column."""

    vec: ProjMatrix

    @property
    def p(self) -> int:
        return self.vec.entries[0][0]

    @property
    def q(self) -> int:
        return self.vec.entries[1][0]

    def __str__(self) -> str:
        return str(self.vec)


@dataclass(frozen=True)
class PuncturedInvariant:
    """``F^n(T)`` as a 2 x 2^n projective matrix."""

    n: int
    mat: ProjMatrix

    def __str__(self) -> str:
        return str(self.mat)


def normalize(values: Sequence[PhiScalar], rows: int, cols: int) -> ProjMatrix:
    """Divide out the common root of unity and canonicalize.

    Args:
        values: row-major entries, each an integer multiple of a root of unity.
        rows: number of rows.
        cols: number of columns.

    Raises:
        PhaseIncoherence: the entries do not share one root of unity up to sign.
    """
    first = next((v for v in values if v.mag), None)
    ints = []
    if first is None:
        ints = [0] * len(values)
    else:
        z = PhiScalar(1, -first.exp)
        for v in values:
            w = phi_mul(v, z)
            if w.mag and w.exp != 0:
                raise PhaseIncoherence(f"entries {[str(x) for x in values]} are not coherent")
            ints.append(w.mag)
    return ProjMatrix(tuple(tuple(ints[r * cols:(r + 1) * cols]) for r in range(rows)))


def closure_brackets(b: Diagram, method: str = "auto") -> tuple[PhiScalar, PhiScalar]:
    """Brackets of the numerator and denominator closures of a ball tangle."""
    b.require_boundaries(1, "f")
    return bracket(numerator_closure(b), method), bracket(denominator_closure(b), method)


def inv_f(b: Diagram, method: str = "auto") -> BallInvariant:
    """Invariant ``f(B) = [z<N(B)>; i z<D(B)>]`` of a ball tangle."""
    n, d = closure_brackets(b, method)
    return BallInvariant(normalize([n, phi_mul(I_UNIT, d)], 2, 1))


_FUND = None


def _fundamentals():
    global _FUND
    if _FUND is None:
        _FUND = (fundamental_tangle(1), fundamental_tangle(2))
    return _FUND


def inv_Fn(t: Diagram, method: str = "auto") -> PuncturedInvariant:
    """Invariant ``F^n`` of a tangle with ``n = boundaries - 1`` holes."""
    if t.boundaries < 1:
        raise BoundaryMismatch("F^n needs an outer boundary")
    n = t.boundaries - 1
    if n == 0:
        return PuncturedInvariant(0, inv_f(t, method).vec)
    fund = _fundamentals()
    top, bottom = [], []
    for idx in MultiIndex.all(n):
        filled = fill_hole(t, [fund[b - 1] for b in idx.bits])
        num, den = closure_brackets(filled, method)
        w = PhiScalar(1, 0)
        for _ in range(idx.weight):
            w = phi_mul(w, MINUS_I)
        top.append(phi_mul(w, num))
        bottom.append(phi_mul(phi_mul(w, I_UNIT), den))
    return PuncturedInvariant(n, normalize(top + bottom, 2, 2**n))


def inv_F(s: Diagram, method: str = "auto") -> ProjMatrix:
    """``F`` of a spherical tangle as a 2x2 matrix."""
    s.require_boundaries(2, "F")
    return inv_Fn(s, method).mat


def compose_law_check(t: Diagram, fills: Sequence[Diagram], method: str = "auto") -> bool:
    """Check ``f(T(B_1..B_n)) = F^n(T) [xi^n](f(B_1)..f(B_n))``."""
    if len(fills) != t.boundaries - 1 or not fills:
        return False
    lhs = inv_f(fill_hole(t, fills), method).vec
    rhs = proj_matmul(inv_Fn(t, method).mat, xi_proj([inv_f(b, method).vec for b in fills]))
    return lhs == rhs


def krebes_check(tangles: Iterable[BallInvariant | ProjMatrix], link_bracket: PhiScalar) -> bool:
    """True iff the product of ``gcd(p_i, q_i)`` divides ``|<L>|``.

    Zero divides only zero.
    """
    prod = 1
    for t in tangles:
        vec = t.vec if isinstance(t, BallInvariant) else t
        prod *= gcd_list(vec.flat())
    m = link_bracket.magnitude
    if prod == 0:
        return m == 0
    return m % prod == 0


# ---------------------------------------------------------------------------
# matrix-level formulas


def _abcd(m: ProjMatrix):
    if m.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 matrix, got {m.shape}")
    (a, g), (b, d) = m.entries
    return a, b, g, d


def _pq(v) -> tuple[int, int]:
    vec = v.vec if isinstance(v, BallInvariant) else v
    if vec.shape != (2, 1):
        raise ShapeError(f"expected a 2x1 column, got {vec.shape}")
    return vec.entries[0][0], vec.entries[1][0]


def _m(a, g, b, d) -> ProjMatrix:
    return ProjMatrix(((a, g), (b, d)))


def mat_star(m: ProjMatrix) -> ProjMatrix:
    a, b, g, d = _abcd(m)
    return _m(a, -g, -b, d)


def mat_minus(m: ProjMatrix) -> ProjMatrix:
    a, b, g, d = _abcd(m)
    return _m(d, g, b, a)


def mat_r1(m: ProjMatrix) -> ProjMatrix:
    a, b, g, d = _abcd(m)
    return _m(-g, a, -d, b)


def mat_r2(m: ProjMatrix) -> ProjMatrix:
    a, b, g, d = _abcd(m)
    return _m(-b, -d, a, g)


def mat_R(m: ProjMatrix) -> ProjMatrix:
    a, b, g, d = _abcd(m)
    return _m(d, -b, -g, a)


def mat_sum_h(v, m: ProjMatrix) -> ProjMatrix:
    """``F(B +h S) = F(S +h B)`` from ``f(B) = [p;q]``."""
    p, q = _pq(v)
    a, b, g, d = _abcd(m)
    return _m(p * b + q * a, p * d + q * g, q * b, q * d)


def mat_sum_v(v, m: ProjMatrix) -> ProjMatrix:
    p, q = _pq(v)
    a, b, g, d = _abcd(m)
    return _m(p * a, p * g, q * a + p * b, q * g + p * d)


def mat_inner_h(v, m: ProjMatrix) -> ProjMatrix:
    p, q = _pq(v)
    a, b, g, d = _abcd(m)
    return _m(q * a, p * a + q * g, q * b, p * b + q * d)


def mat_inner_v(v, m: ProjMatrix) -> ProjMatrix:
    p, q = _pq(v)
    a, b, g, d = _abcd(m)
    return _m(q * g + p * a, p * g, q * d + p * b, p * d)


def mat_sum(v, m: ProjMatrix, which: str) -> ProjMatrix:
    """Dispatch on ``which`` in ``{"h", "v", "inner-h", "inner-v"}``."""
    table = {"h": mat_sum_h, "v": mat_sum_v, "inner-h": mat_inner_h, "inner-v": mat_inner_v}
    return table[which](v, m)


def bt_sum_h(x, y) -> ProjMatrix:
    p, q = _pq(x)
    r, s = _pq(y)
    return ProjMatrix.column((p * s + q * r, q * s))


def bt_sum_v(x, y) -> ProjMatrix:
    p, q = _pq(x)
    r, s = _pq(y)
    return ProjMatrix.column((p * r, q * r + p * s))


def bt_star(x) -> ProjMatrix:
    p, q = _pq(x)
    return ProjMatrix.column((p, -q))


def bt_R(x) -> ProjMatrix:
    p, q = _pq(x)
    return ProjMatrix.column((q, -p))


def j_formula(p1: int, p2: int, p3: int, p4: int) -> tuple[ProjMatrix, int]:
    """Closed-form ``F(J(p1..p4))`` and its determinant ``(p1 p4 - p2 p3)^2``."""
    e3 = p1 * p2 * p3 + p1 * p2 * p4 + p1 * p3 * p4 + p2 * p3 * p4
    m = _m(
        e3,
        -(p1 * p3 + p1 * p4 + p2 * p4 + p2 * p3),
        p1 * p2 + p1 * p4 + p2 * p3 + p3 * p4,
        -(p1 + p2 + p3 + p4),
    )
    return m, (p1 * p4 - p2 * p3) ** 2


def det_residue(m: ProjMatrix) -> int:
    """``det(m) mod 4`` in ``0..3``."""
    return det2(m) % 4


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def delta_congruence_check(s, s_delta, method: str = "auto") -> bool:
    """Entrywise congruence mod 4 up to one global sign.

    Accepts spherical tangles or their 2x2 invariants.
    """
    m1 = s if isinstance(s, ProjMatrix) else inv_F(s, method)
    m2 = s_delta if isinstance(s_delta, ProjMatrix) else inv_F(s_delta, method)
    if m1.shape != m2.shape:
        return False
    a, b = m1.flat(), m2.flat()
    return any(all((x - eps * y) % 4 == 0 for x, y in zip(a, b)) for eps in (1, -1))
