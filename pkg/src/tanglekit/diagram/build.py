"""
Constructors and planar operations on tangle diagrams.

Everything here either relabels attachments or glues planar pieces along
boundary circles, so planarity is preserved by construction.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import BoundaryMismatch
from .core import LABELS, Diagram, bp, splice, xp

__all__ = [
    "fundamental_tangle",
    "identity_spherical",
    "crossing_tangle",
    "htwist",
    "vtwist",
    "numerator_closure",
    "denominator_closure",
    "fill_hole",
    "fill_holes",
    "connect_h",
    "connect_v",
    "mirror",
    "rotate_r",
    "hflip",
    "vflip",
    "swap",
    "r1",
    "r2",
    "compose_spherical",
    "outer_sum",
    "inner_sum",
    "two_hole_h_template",
    "j_template",
    "build_J",
]

_ROT = {"NW": "SW", "NE": "NW", "SE": "NE", "SW": "SE"}
_HFLIP = {"NW": "NE", "NE": "NW", "SE": "SW", "SW": "SE"}
_VFLIP = {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"}


def fundamental_tangle(j: int) -> Diagram:
    """Crossingless ball tangle: 1 = vertical arcs, 2 = horizontal arcs."""
    if j == 1:
        arcs = ((bp(0, "NW"), bp(0, "SW")), (bp(0, "NE"), bp(0, "SE")))
    elif j == 2:
        arcs = ((bp(0, "NW"), bp(0, "NE")), (bp(0, "SW"), bp(0, "SE")))
    else:
        raise ValueError("fundamental tangle index must be 1 or 2")
    return Diagram(0, arcs, 0, 1)


def identity_spherical() -> Diagram:
    """The annulus with four radial strands joining equal labels."""
    return Diagram(0, tuple((bp(0, lab), bp(1, lab)) for lab in LABELS), 0, 2)


def crossing_tangle() -> Diagram:
    """One crossing in a ball; the unit of :func:`htwist` (f = [1;1])."""
    return htwist(1)


def htwist(p: int) -> Diagram:
    """Row of ``|p|`` horizontal half twists; negative ``p`` is the mirror.

    Built directly in linear time; equals the ``|p|``-fold horizontal sum of
    the single crossing.
    """
    if p == 0:
        return fundamental_tangle(2)
    n = abs(p)
    arcs = [(bp(0, "NW"), xp(0, 0)), (bp(0, "SW"), xp(0, 1))]
    for k in range(n - 1):
        arcs.append((xp(k, 3), xp(k + 1, 0)))
        arcs.append((xp(k, 2), xp(k + 1, 1)))
    arcs.append((xp(n - 1, 3), bp(0, "NE")))
    arcs.append((xp(n - 1, 2), bp(0, "SE")))
    d = Diagram(n, tuple(arcs), 0, 1)
    return d if p > 0 else mirror(d)


def vtwist(q: int) -> Diagram:
    """Column of ``|q|`` vertical half twists, with ``vtwist(0)`` vertical arcs."""
    return rotate_r(htwist(-q), 3)


def _closure(b: Diagram, pairs) -> Diagram:
    b.require_boundaries(1, "closure")
    joins = [((0, bp(0, x)), (0, bp(0, y))) for x, y in pairs]
    return splice([b], joins, {}, 0)


def numerator_closure(b: Diagram) -> Diagram:
    """Join NW to NE and SW to SE above and below the ball."""
    return _closure(b, (("NW", "NE"), ("SW", "SE")))


def denominator_closure(b: Diagram) -> Diagram:
    """Join NW to SW and NE to SE around the sides of the ball."""
    return _closure(b, (("NW", "SW"), ("NE", "SE")))


def fill_holes(t: Diagram, fills: Mapping[int, Diagram]) -> Diagram:
    """Fill selected holes of ``t``.

    Args:
        t: diagram with at least one hole.
        fills: map from hole index (1-based) to a diagram with >= 1 boundary.

    Returns:
        The spliced diagram. Unfilled holes and the holes of the fills are
        renumbered in order, each fill's holes taking the place of the hole
        it fills.
    """
    if t.boundaries < 1:
        raise BoundaryMismatch("cannot fill a link diagram")
    for h, f in fills.items():
        if not 1 <= h < t.boundaries:
            raise BoundaryMismatch(f"hole {h} does not exist")
        if f.boundaries < 1:
            raise BoundaryMismatch("a fill must have an outer boundary")
    holes = sorted(fills)
    pieces = [t] + [fills[h] for h in holes]
    piece_of = {h: k + 1 for k, h in enumerate(holes)}
    joins = []
    rename = {}
    nxt = 1
    for lab in LABELS:
        rename[(0, bp(0, lab))] = bp(0, lab)
    for h in range(1, t.boundaries):
        if h in piece_of:
            i = piece_of[h]
            for lab in LABELS:
                joins.append(((0, bp(h, lab)), (i, bp(0, lab))))
            for g in range(1, pieces[i].boundaries):
                for lab in LABELS:
                    rename[(i, bp(g, lab))] = bp(nxt, lab)
                nxt += 1
        else:
            for lab in LABELS:
                rename[(0, bp(h, lab))] = bp(nxt, lab)
            nxt += 1
    return splice(pieces, joins, rename, nxt)


def fill_hole(t: Diagram, fills: Sequence[Diagram]) -> Diagram:
    """Fill every hole of ``t``, hole ``k`` receiving ``fills[k-1]``."""
    if len(fills) != t.boundaries - 1:
        raise BoundaryMismatch(f"{t.boundaries - 1} holes but {len(fills)} fills")
    return fill_holes(t, {k + 1: f for k, f in enumerate(fills)})


def connect_h(b1: Diagram, b2: Diagram) -> Diagram:
    """Horizontal sum: b1's NE/SE meet b2's NW/SW.

    Works for any operands with an outer boundary; holes of ``b1`` come
    first, then those of ``b2``.
    """
    if b1.boundaries < 1 or b2.boundaries < 1:
        raise BoundaryMismatch("connect sums need an outer boundary on both operands")
    joins = [((0, bp(0, "NE")), (1, bp(0, "NW"))), ((0, bp(0, "SE")), (1, bp(0, "SW")))]
    rename = {
        (0, bp(0, "NW")): bp(0, "NW"),
        (0, bp(0, "SW")): bp(0, "SW"),
        (1, bp(0, "NE")): bp(0, "NE"),
        (1, bp(0, "SE")): bp(0, "SE"),
    }
    nxt = 1
    for i, d in enumerate((b1, b2)):
        for g in range(1, d.boundaries):
            for lab in LABELS:
                rename[(i, bp(g, lab))] = bp(nxt, lab)
            nxt += 1
    return splice([b1, b2], joins, rename, nxt)


def connect_v(b1: Diagram, b2: Diagram) -> Diagram:
    """Vertical sum ``(b1^R +h b2^R)^RRR``; b1 sits on top."""
    return rotate_r(connect_h(rotate_r(b1), rotate_r(b2)), 3)


def mirror(d: Diagram) -> Diagram:
    """Exchange over and under at every crossing."""
    return d.map_attachments(lambda a: ("x", a[1], (a[2] - 1) % 4) if a[0] == "x" else a)


def _relabel(d: Diagram, table, which=None) -> Diagram:
    def fn(a):
        if a[0] == "b" and (which is None or a[1] in which):
            return ("b", a[1], table[a[2]])
        return a

    return d.map_attachments(fn)


def rotate_r(d: Diagram, times: int = 1) -> Diagram:
    """Rotate the whole picture 90 degrees counterclockwise ``times`` times."""
    if d.boundaries < 1:
        raise BoundaryMismatch("rotation needs a boundary")
    for _ in range(times % 4):
        d = _relabel(d, _ROT)
    return d


def _flip_ports(a):
    return ("x", a[1], (1 - a[2]) % 4) if a[0] == "x" else a


def hflip(d: Diagram) -> Diagram:
    """Half turn about the vertical axis of the projection plane."""
    if d.boundaries < 1:
        raise BoundaryMismatch("flip needs a boundary")
    d = d.map_attachments(_flip_ports)
    return _relabel(d, _HFLIP)


def vflip(d: Diagram) -> Diagram:
    """Half turn about the horizontal axis of the projection plane."""
    if d.boundaries < 1:
        raise BoundaryMismatch("flip needs a boundary")
    d = d.map_attachments(_flip_ports)
    return _relabel(d, _VFLIP)


def swap(s: Diagram) -> Diagram:
    """Exchange the inner hole and the outer sphere of a spherical tangle."""
    s.require_boundaries(2, "swap")

    def fn(a):
        if a[0] == "b":
            return ("b", 1 - a[1], a[2])
        return _flip_ports(a)

    return s.map_attachments(fn)


def r1(s: Diagram) -> Diagram:
    """Rotate only the inner hole 90 degrees counterclockwise."""
    s.require_boundaries(2, "r1")
    return _relabel(s, _ROT, which={1})


def r2(s: Diagram) -> Diagram:
    """Rotate only the outer sphere 90 degrees counterclockwise."""
    s.require_boundaries(2, "r2")
    return _relabel(s, _ROT, which={0})


def compose_spherical(s2: Diagram, s1: Diagram) -> Diagram:
    """``s2 o s1``: place ``s1`` inside the hole of ``s2``."""
    s2.require_boundaries(2, "compose")
    s1.require_boundaries(2, "compose")
    return fill_holes(s2, {1: s1})


def outer_sum(b: Diagram, s: Diagram, which: str, side: int = 1) -> Diagram:
    """Outer connect sums of a ball tangle and a spherical tangle.

    Args:
        b: ball tangle.
        s: spherical tangle.
        which: ``"h"`` or ``"v"``.
        side: 1 puts ``b`` first (left or top), 2 puts ``s`` first.
    """
    b.require_boundaries(1, "outer sum")
    s.require_boundaries(2, "outer sum")
    first, second = (b, s) if side == 1 else (s, b)
    if which == "h":
        return connect_h(first, second)
    if which == "v":
        return connect_v(first, second)
    raise ValueError(f"unknown sum {which!r}")


def inner_sum(b: Diagram, s: Diagram, which: str, side: int = 1) -> Diagram:
    """Inner connect sums, defined through swap and the half-turn flips.

    ``B .+h S = (S^- +h B^hf)^-`` and ``S .+h B = (B^hf +h S^-)^-``; the
    vertical versions use ``+v`` and the vertical-axis flip ``vf``.
    """
    b.require_boundaries(1, "inner sum")
    s.require_boundaries(2, "inner sum")
    if which == "h":
        bb, join = hflip(b), connect_h
    elif which == "v":
        bb, join = vflip(b), connect_v
    else:
        raise ValueError(f"unknown sum {which!r}")
    if side == 1:
        return swap(join(swap(s), bb))
    return swap(join(bb, swap(s)))


def two_hole_h_template() -> Diagram:
    """Two holes side by side joined like a horizontal sum."""
    hole = identity_spherical()
    return connect_h(hole, hole)


# Four balls in an annulus; see :func:`build_J`.
_J_TEMPLATE_ARCS = (
    ((0, "NW"), (2, "NW")), ((2, "SW"), (4, "NW")), ((4, "SW"), (0, "SW")),
    ((1, "NW"), (2, "SE")), ((2, "NE"), (3, "NW")), ((3, "SW"), (1, "NE")),
    ((1, "SW"), (4, "NE")), ((4, "SE"), (5, "SW")), ((5, "NW"), (1, "SE")),
    ((0, "NE"), (3, "NE")), ((3, "SE"), (5, "NE")), ((5, "SE"), (0, "SE")),
)


def j_template() -> Diagram:
    """Crossingless annulus with four extra twist balls (boundaries 2..5)."""
    arcs = tuple((bp(*u), bp(*v)) for u, v in _J_TEMPLATE_ARCS)
    return Diagram(0, arcs, 0, 6)


def build_J(p1: int, p2: int, p3: int, p4: int) -> Diagram:
    """Spherical tangle with ``p_i`` half twists in four clasping balls.

    The outer strands run down the left and right sides. Two strands hang
    from the inner hole, one up and one down, each clasping both outer
    strands; balls 1 and 2 are the upper clasps (left, right) and balls 3
    and 4 the lower ones. Each ball holds a horizontal twist row.
    """
    t = j_template()
    fills = {2: htwist(p1), 3: htwist(p2), 4: htwist(p3), 5: htwist(p4)}
    return fill_holes(t, fills)
