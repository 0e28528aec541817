"""
Kauffman bracket of link diagrams at ``A = exp(i*pi/4)``.

At this value the loop factor ``-A^2 - A^-2`` vanishes, so only states with a
single circle contribute. Three evaluators are provided:

* :func:`bracket_full` enumerates every state and applies the loop factor
  literally (the slow oracle);
* :func:`bracket_monocyclic` enumerates states depth first and abandons a
  branch as soon as a second circle closes (the default for small diagrams);
* :func:`bracket_skein` expands the skein relation crossing by crossing,
  merging partial smoothings with equal boundary connectivity, and sums in
  Z[A]. Its cost is governed by the width of the crossing order rather than
  the crossing count.

Smoothing convention: with the over-strand on ports 0-2, the A-smoothing
joins ports 0-1 and 2-3, the B-smoothing joins 0-3 and 1-2.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .diagram.core import Diagram
from .errors import BoundaryMismatch, CrossingCapExceeded, EmptyDiagram, NonCoherentPhases
from .phi import ZERO, Cyc8, PhiScalar, cyc_shift, cyc_to_phi, phi_add

__all__ = [
    "State",
    "DEFAULT_MAX_CROSSINGS",
    "max_crossings",
    "bracket",
    "bracket_full",
    "bracket_monocyclic",
    "bracket_skein",
    "loop_count",
    "state_parity",
    "LOOP_FACTOR",
]

DEFAULT_MAX_CROSSINGS = 24

# -A^2 - A^-2, computed rather than hard-coded
LOOP_FACTOR = -Cyc8.unit(2) - Cyc8.unit(-2)


def max_crossings() -> int:
    """Crossing cap for the enumerating evaluators (env ``TANGLEKIT_MAX_CROSSINGS``)."""
    val = os.environ.get("TANGLEKIT_MAX_CROSSINGS")
    return int(val) if val else DEFAULT_MAX_CROSSINGS


@dataclass(frozen=True)
class State:
    """Smoothing choice per crossing: 0 for A, 1 for B."""

    bits: tuple[int, ...]

    @classmethod
    def from_string(cls, s: str) -> "State":
        return cls(tuple(0 if ch in "Aa" else 1 for ch in s))

    @classmethod
    def from_int(cls, s: int, c: int) -> "State":
        return cls(tuple((s >> i) & 1 for i in range(c)))

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def alpha(self) -> int:
        return self.bits.count(0)

    @property
    def beta(self) -> int:
        return self.bits.count(1)

    def __str__(self) -> str:
        return "".join("AB"[b] for b in self.bits)


def _compile(l: Diagram) -> np.ndarray:
    if l.boundaries:
        raise BoundaryMismatch("the bracket is defined on link diagrams only")
    if l.crossings == 0 and l.free_loops == 0:
        raise EmptyDiagram("empty diagram")
    nbr = np.empty(4 * l.crossings, np.int64)
    for u, v in l.arcs:
        a = 4 * u[1] + u[2]
        b = 4 * v[1] + v[2]
        nbr[a] = b
        nbr[b] = a
    return nbr


def _check_cap(l: Diagram, cap: int | None) -> None:
    cap = max_crossings() if cap is None else cap
    if l.crossings > cap:
        raise CrossingCapExceeded(f"{l.crossings} crossings exceed the cap of {cap}")


def _crossingless(l: Diagram) -> PhiScalar:
    return PhiScalar(1) if l.free_loops == 1 else ZERO


def bracket_full(l: Diagram, cap: int | None = None) -> PhiScalar:
    """Brute-force state sum over all ``2^c`` states."""
    nbr = _compile(l)
    _check_cap(l, cap)
    if l.crossings == 0:
        acc = Cyc8.unit(0)
        for _ in range(l.free_loops - 1):
            acc = acc * LOOP_FACTOR
        return acc.to_phi()
    from ._kernels import full_state_sum

    delta = np.array(LOOP_FACTOR.coeffs, np.int64)
    acc = full_state_sum(nbr, l.crossings, l.free_loops, delta)
    return cyc_to_phi([int(x) for x in acc])


def _bfs_order(l: Diagram) -> list[int]:
    """Crossing order that keeps the processed region connected."""
    part = l.partner
    seen = [False] * l.crossings
    order = []
    for root in range(l.crossings):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            c = queue.popleft()
            order.append(c)
            for p in range(4):
                o = part[("x", c, p)]
                if not seen[o[1]]:
                    seen[o[1]] = True
                    queue.append(o[1])
    return order


def bracket_monocyclic(l: Diagram, cap: int | None = None) -> PhiScalar:
    """Sum ``A^(alpha-beta)`` over the single-circle states only."""
    nbr = _compile(l)
    _check_cap(l, cap)
    if l.crossings == 0:
        return _crossingless(l)
    if l.free_loops:
        return ZERO
    from ._kernels import monocyclic_counts

    order = np.array(_bfs_order(l), np.int64)
    counts = monocyclic_counts(nbr, order, l.crossings)
    total = ZERO
    try:
        for e in range(8):
            if counts[e]:
                total = phi_add(total, PhiScalar(int(counts[e]), e))
    except NonCoherentPhases as exc:  # pragma: no cover - would be a model bug
        raise AssertionError(f"monocyclic exponents not coherent: {exc}") from exc
    return total


def _greedy_order(l: Diagram) -> list[int]:
    """Crossing order that next takes the crossing with most arcs into the
    processed region, which keeps the skein frontier narrow."""
    part = l.partner
    conn = [0] * l.crossings
    done = [False] * l.crossings
    heap = [(0, c) for c in range(l.crossings)]
    heapq.heapify(heap)
    order = []
    while heap:
        neg, c = heapq.heappop(heap)
        if done[c] or -neg != conn[c]:
            continue
        done[c] = True
        order.append(c)
        for p in range(4):
            o = part[("x", c, p)]
            if o[0] == "x" and not done[o[1]]:
                conn[o[1]] += 1
                heapq.heappush(heap, (-conn[o[1]], o[1]))
    return order


_SMOOTHINGS = (((0, 1), (2, 3)), ((0, 3), (1, 2)))


def bracket_skein(l: Diagram) -> PhiScalar:
    """Skein expansion ``<L> = A<L_A> + A^-1<L_B>``, summed in Z[A].

    Raises:
        ResultNotInPhi: the final vector is not a single-axis multiple.
    """
    _compile(l)
    part = l.partner
    start_flag = l.free_loops > 0
    coeff = (1, 0, 0, 0)
    for _ in range(max(l.free_loops - 1, 0)):
        coeff = (Cyc8(coeff) * LOOP_FACTOR).coeffs
    # frontier state: (frozenset of changed mates, at least one circle closed)
    terms = {(frozenset(), start_flag): coeff}
    for c in _greedy_order(l):
        new_terms: dict = {}
        for (delta, flag), co in terms.items():
            base = dict(delta)
            for choice, pairs in enumerate(_SMOOTHINGS):
                mates = dict(base)
                f = flag
                cc = cyc_shift(co, 1 if choice == 0 else -1)
                for a, b in pairs:
                    u, v = ("x", c, a), ("x", c, b)
                    mu = mates.pop(u, None) or part[u]
                    mv = mates.pop(v, None) or part[v]
                    if mu == v:
                        if f:
                            cc = (Cyc8(cc) * LOOP_FACTOR).coeffs
                        f = True
                    else:
                        _set_mate(mates, part, mu, mv)
                        _set_mate(mates, part, mv, mu)
                if not any(cc):
                    continue
                key = (frozenset(mates.items()), f)
                old = new_terms.get(key)
                new_terms[key] = cc if old is None else tuple(x + y for x, y in zip(old, cc))
        terms = {k: v for k, v in new_terms.items() if any(v)}
    total = [0, 0, 0, 0]
    for (_, flag), co in terms.items():
        for i in range(4):
            total[i] += co[i]
    return cyc_to_phi(total)


def _set_mate(mates: dict, part: dict, u, v) -> None:
    if part[u] == v:
        mates.pop(u, None)
    else:
        mates[u] = v


def bracket(l: Diagram, method: str = "auto") -> PhiScalar:
    """Dispatch to an evaluator.

    Args:
        l: link diagram.
        method: ``"full"``, ``"monocyclic"``, ``"skein"`` or ``"auto"``.
            ``"auto"`` uses the monocyclic enumeration within the crossing
            cap and the skein expansion above it.
    """
    if method == "full":
        return bracket_full(l)
    if method == "monocyclic":
        return bracket_monocyclic(l)
    if method == "skein":
        return bracket_skein(l)
    if method != "auto":
        raise ValueError(f"unknown bracket method {method!r}")
    if l.crossings <= min(max_crossings(), 16):
        return bracket_monocyclic(l)
    return bracket_skein(l)


def loop_count(l: Diagram, state: State | Sequence[int]) -> int:
    """Number of circles ``d(state)``, free loops included."""
    nbr = _compile(l)
    bits = state.bits if isinstance(state, State) else tuple(state)
    if len(bits) != l.crossings:
        raise ValueError("state must assign every crossing")
    if l.crossings == 0:
        return l.free_loops
    from ._kernels import state_loops

    s = sum(int(b) << i for i, b in enumerate(bits))
    return l.free_loops + int(state_loops(nbr, l.crossings, s))


def state_parity(l: Diagram, s1: State | Sequence[int], s2: State | Sequence[int]) -> bool:
    """True iff ``d(s1)`` and ``d(s2)`` have the same parity."""
    return (loop_count(l, s1) - loop_count(l, s2)) % 2 == 0
