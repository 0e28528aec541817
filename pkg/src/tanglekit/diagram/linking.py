"""
Strand components, crossing signs, writhe, and linking matrices.

Orientation convention: each closed component has a canonical direction in
which it first enters its lowest-numbered crossing through the smaller of
the two ports it uses there. An orientation vector of ``+1``/``-1`` entries
keeps or reverses these directions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import BoundaryMismatch
from .core import Diagram

__all__ = ["components", "component_count", "crossing_signs", "writhe", "linking_matrix"]


def _walk(d: Diagram, enter) -> list[tuple]:
    """Follow a strand from an entering port until it closes or leaves."""
    part = d.partner
    path = []
    cur = enter
    while True:
        path.append(cur)
        out = ("x", cur[1], (cur[2] + 2) % 4)
        nxt = part[out]
        if nxt[0] != "x" or nxt == enter:
            return path
        cur = nxt


def components(d: Diagram) -> list[list[tuple]]:
    """Closed strand components as lists of entering ports, canonically oriented.

    Open strands (ending on boundaries) and free loops are not included.
    """
    part = d.partner
    used = set()
    open_ports = set()
    for a in part:
        if a[0] == "b":
            nxt = part[a]
            while nxt[0] == "x":
                open_ports.add((nxt[1], nxt[2] % 2))
                nxt = part[("x", nxt[1], (nxt[2] + 2) % 4)]
    comps = []
    for c in range(d.crossings):
        for axis in (0, 1):
            if (c, axis) in used or (c, axis) in open_ports:
                continue
            path = _walk(d, ("x", c, axis))
            for q in path:
                used.add((q[1], q[2] % 2))
            comps.append(path)
    return comps


def component_count(d: Diagram) -> int:
    """All components: closed strands, open strands, and free loops."""
    part = d.partner
    n_open = sum(1 for a in part if a[0] == "b") // 2
    return len(components(d)) + n_open + d.free_loops


def _oriented(d: Diagram, orientation: Sequence[int] | None):
    comps = components(d)
    if orientation is None:
        orientation = [1] * len(comps)
    if len(orientation) != len(comps):
        raise ValueError(f"{len(comps)} components but {len(orientation)} orientations")
    part = d.partner
    # exit port of each strand passage, keyed by (crossing, axis)
    exits = {}
    owner = {}
    for k, (path, o) in enumerate(zip(comps, orientation)):
        for q in path:
            out = (q[2] + 2) % 4 if o > 0 else q[2]
            exits[(q[1], q[2] % 2)] = out
            owner[(q[1], q[2] % 2)] = k
    return comps, exits, owner


def crossing_signs(d: Diagram, orientation: Sequence[int] | None = None) -> dict[int, int]:
    """Sign of each crossing lying on closed components only."""
    _, exits, _ = _oriented(d, orientation)
    signs = {}
    for c in range(d.crossings):
        if (c, 0) in exits and (c, 1) in exits:
            signs[c] = 1 if (exits[(c, 1)] - exits[(c, 0)]) % 4 == 1 else -1
    return signs


def writhe(d: Diagram, orientation: Sequence[int] | None = None) -> int:
    return sum(crossing_signs(d, orientation).values())


def linking_matrix(l: Diagram, orientation: Sequence[int] | None = None) -> list[list[Fraction]]:
    """Pairwise linking numbers of the closed components (diagonal zero).

    Args:
        l: link diagram.
        orientation: ``+1``/``-1`` per component of :func:`components`.

    Returns:
        Symmetric matrix of half-integers as :class:`fractions.Fraction`.
    """
    if l.boundaries:
        raise BoundaryMismatch("linking numbers need a link diagram")
    comps, exits, owner = _oriented(l, orientation)
    n = len(comps)
    m = [[Fraction(0)] * n for _ in range(n)]
    for c in range(l.crossings):
        i, j = owner[(c, 0)], owner[(c, 1)]
        if i == j:
            continue
        s = 1 if (exits[(c, 1)] - exits[(c, 0)]) % 4 == 1 else -1
        m[i][j] += Fraction(s, 2)
        m[j][i] += Fraction(s, 2)
    return m
