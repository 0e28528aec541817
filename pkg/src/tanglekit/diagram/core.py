"""
Combinatorial diagrams of links and punctured ball tangles.

A diagram is a perfect matching on *attachments*. An attachment is either a
crossing port ``("x", crossing, port)`` or a boundary endpoint
``("b", boundary, label)``. Ports ``0..3`` run counterclockwise and the
over-strand passes through ports 0 and 2. Boundary 0 is the outer sphere and
boundaries ``1..n`` are holes; each carries the labels NW, NE, SE, SW as drawn
in the plane.

Every gluing operation funnels through :func:`splice`, which traces paths
through identified endpoints and counts the closed circles that appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from ..errors import BoundaryMismatch, PerfectMatchingError

__all__ = [
    "LABELS",
    "Attachment",
    "Diagram",
    "xp",
    "bp",
    "splice",
    "dissolve",
    "rotation",
    "canonical",
    "isomorphic",
]

LABELS = ("NW", "NE", "SE", "SW")

Attachment = tuple  # ("x", crossing, port) or ("b", boundary, label)


def xp(c: int, p: int) -> Attachment:
    return ("x", c, p % 4)


def bp(b: int, label: str) -> Attachment:
    return ("b", b, label)


@dataclass(frozen=True)
class Diagram:
    """Immutable 4-valent diagram with boundary circles.

    Attributes:
        crossings: number of crossings, with ids ``0..crossings-1``.
        arcs: sorted tuple of sorted attachment pairs.
        free_loops: closed circles without crossings.
        boundaries: number of boundary circles (0 link, 1 ball, 2 spherical).
        planarity_verified: False for diagrams read from external data.
    """

    crossings: int
    arcs: tuple
    free_loops: int = 0
    boundaries: int = 0
    planarity_verified: bool = field(default=True, compare=False)

    def __post_init__(self):
        arcs = tuple(sorted(tuple(sorted((tuple(u), tuple(v)))) for u, v in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        if self.crossings < 0 or self.free_loops < 0 or self.boundaries < 0:
            raise PerfectMatchingError("negative counts in diagram")
        seen = set()
        for arc in arcs:
            for att in arc:
                _check_attachment(att, self.crossings, self.boundaries)
                if att in seen:
                    raise PerfectMatchingError(f"attachment {att} used twice")
                seen.add(att)
        expected = 4 * self.crossings + 4 * self.boundaries
        if len(seen) != expected:
            raise PerfectMatchingError(f"{expected - len(seen)} attachments left unmatched")

    @cached_property
    def partner(self) -> dict:
        out = {}
        for u, v in self.arcs:
            out[u] = v
            out[v] = u
        return out

    @property
    def n_holes(self) -> int:
        return self.boundaries - 1

    @property
    def kind(self) -> str:
        return {0: "link", 1: "ball", 2: "spherical"}.get(self.boundaries, "punctured")

    def require_boundaries(self, n: int, what: str = "operation") -> None:
        if self.boundaries != n:
            raise BoundaryMismatch(f"{what} needs {n} boundary circles, got {self.boundaries}")

    def map_attachments(self, fn: Callable[[Attachment], Attachment], **changes) -> "Diagram":
        """Return a copy with every attachment replaced by ``fn(att)``."""
        args = dict(
            crossings=self.crossings,
            arcs=tuple((fn(u), fn(v)) for u, v in self.arcs),
            free_loops=self.free_loops,
            boundaries=self.boundaries,
            planarity_verified=self.planarity_verified,
        )
        args.update(changes)
        return Diagram(**args)

    def with_loops(self, k: int) -> "Diagram":
        return Diagram(self.crossings, self.arcs, self.free_loops + k, self.boundaries,
                       self.planarity_verified)

    def __repr__(self) -> str:
        return (f"Diagram({self.kind}, crossings={self.crossings}, arcs={len(self.arcs)}, "
                f"free_loops={self.free_loops}, boundaries={self.boundaries})")


def _check_attachment(att, crossings: int, boundaries: int) -> None:
    if len(att) != 3:
        raise PerfectMatchingError(f"malformed attachment {att}")
    kind, i, p = att
    if kind == "x":
        if not (isinstance(i, int) and 0 <= i < crossings and p in (0, 1, 2, 3)):
            raise PerfectMatchingError(f"bad crossing port {att}")
    elif kind == "b":
        if not (isinstance(i, int) and 0 <= i < boundaries and p in LABELS):
            raise PerfectMatchingError(f"bad boundary endpoint {att}")
    else:
        raise PerfectMatchingError(f"unknown attachment kind {kind!r}")


# ---------------------------------------------------------------------------
# gluing


def splice(
    pieces: Sequence[Diagram],
    joins: Iterable[tuple[tuple[int, Attachment], tuple[int, Attachment]]],
    rename: Mapping[tuple[int, Attachment], Attachment],
    boundaries: int,
    extra_loops: int = 0,
) -> Diagram:
    """Glue diagrams along identified boundary endpoints.

    Args:
        pieces: diagrams; crossings are renumbered consecutively in this order.
        joins: pairs of ``(piece index, boundary attachment)`` to identify.
            Strands pass straight through identified endpoints.
        rename: new attachment for every boundary endpoint that survives.
        boundaries: boundary count of the result.
        extra_loops: additional free loops to add.

    Returns:
        The glued diagram. Closed circles made only of identified endpoints
        become free loops.
    """
    offsets = []
    total = 0
    for d in pieces:
        offsets.append(total)
        total += d.crossings
    through: dict = {}
    for a, b in joins:
        if a in through or b in through or a == b:
            raise BoundaryMismatch(f"endpoint joined twice: {a} / {b}")
        through[a] = b
        through[b] = a

    verified = all(d.planarity_verified for d in pieces)
    loops = sum(d.free_loops for d in pieces) + extra_loops

    def final(node):
        i, att = node
        if att[0] == "x":
            return ("x", offsets[i] + att[1], att[2])
        try:
            return rename[node]
        except KeyError:
            raise BoundaryMismatch(f"boundary endpoint {node} is neither joined nor kept") from None

    arcs = []
    seen = set()
    for i, d in enumerate(pieces):
        part = d.partner
        for att in part:
            node = (i, att)
            if node in seen or node in through:
                continue
            cur = node
            nxt = (i, part[att])
            while nxt in through:
                seen.add(nxt)
                cur = through[nxt]
                seen.add(cur)
                nxt = (cur[0], pieces[cur[0]].partner[cur[1]])
            seen.add(node)
            seen.add(nxt)
            arcs.append((final(node), final(nxt)))
    for node in through:
        if node in seen:
            continue
        cur = node
        while cur not in seen:
            seen.add(cur)
            other = through[cur]
            seen.add(other)
            cur = (other[0], pieces[other[0]].partner[other[1]])
        loops += 1
    return Diagram(total, tuple(arcs), loops, boundaries, verified)


def dissolve(d: Diagram, remove: Iterable[int]) -> Diagram:
    """Delete crossings, letting each strand run straight through them.

    Remaining crossings keep their relative order. Circles that close up
    entirely inside the removed crossings become free loops.
    """
    gone = sorted(set(remove))
    gone_set = set(gone)
    keep = [c for c in range(d.crossings) if c not in gone_set]
    newid = {c: k for k, c in enumerate(keep)}
    part = d.partner

    def final(att):
        if att[0] == "x":
            return ("x", newid[att[1]], att[2])
        return att

    def is_gone(att):
        return att[0] == "x" and att[1] in gone_set

    arcs = []
    seen = set()
    loops = d.free_loops
    for att in part:
        if att in seen or is_gone(att):
            continue
        nxt = part[att]
        while is_gone(nxt):
            seen.add(nxt)
            cur = ("x", nxt[1], (nxt[2] + 2) % 4)
            seen.add(cur)
            nxt = part[cur]
        seen.add(att)
        seen.add(nxt)
        arcs.append((final(att), final(nxt)))
    for c in gone:
        for p in range(4):
            att = ("x", c, p)
            if att in seen:
                continue
            cur = att
            while cur not in seen:
                seen.add(cur)
                opp = ("x", cur[1], (cur[2] + 2) % 4)
                seen.add(opp)
                cur = part[opp]
            loops += 1
    return Diagram(len(keep), tuple(arcs), loops, d.boundaries, d.planarity_verified)


# ---------------------------------------------------------------------------
# planar rotation system

_HOLE_ROT = {"NE": "NW", "NW": "SW", "SW": "SE", "SE": "NE"}
_OUTER_ROT = {"NE": "SE", "SE": "SW", "SW": "NW", "NW": "NE"}


def rotation(att: Attachment) -> Attachment:
    """Next attachment counterclockwise around the same vertex.

    Holes are ordinary vertices of the plane graph. The outer sphere is the
    vertex at infinity, so its cyclic order is reversed.
    """
    kind, i, p = att
    if kind == "x":
        return ("x", i, (p + 1) % 4)
    if i == 0:
        return ("b", 0, _OUTER_ROT[p])
    return ("b", i, _HOLE_ROT[p])


# ---------------------------------------------------------------------------
# canonical numbering


def _bfs_number(part: dict, queue: list, order: dict[int, int]) -> None:
    head = 0
    while head < len(queue):
        att = queue[head]
        head += 1
        nxt = part[att]
        if nxt[0] == "x" and nxt[1] not in order:
            order[nxt[1]] = len(order)
            c, start = nxt[1], nxt[2]
            queue.extend(("x", c, (start + k) % 4) for k in range(4))


def canonical(d: Diagram) -> Diagram:
    """Renumber crossings by breadth-first discovery.

    Search starts from the boundary labels in order. Crossings on split
    closed components are then numbered from the root crossing and port
    giving the smallest encoding, so the result depends only on the
    combinatorics.
    """
    part = d.partner
    order: dict[int, int] = {}
    _bfs_number(part, [bp(b, lab) for b in range(d.boundaries) for lab in LABELS], order)
    while len(order) < d.crossings:
        best = None
        for c in range(d.crossings):
            if c in order:
                continue
            for p in range(4):
                trial = dict(order)
                _bfs_number(part, [part[("x", c, p)]], trial)
                new = {k: v for k, v in trial.items() if k not in order}
                code = sorted(
                    tuple(sorted(((a[0], trial[a[1]], a[2]) if a[0] == "x" else a) for a in arc))
                    for arc in d.arcs
                    if arc[0][0] == "x" and arc[0][1] in new
                )
                if best is None or code < best[0]:
                    best = (code, trial)
        order = best[1]
    return d.map_attachments(lambda a: ("x", order[a[1]], a[2]) if a[0] == "x" else a)


def isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """Structural equality up to crossing renumbering (boundary-anchored)."""
    if (d1.crossings, d1.boundaries, d1.free_loops) != (d2.crossings, d2.boundaries, d2.free_loops):
        return False
    return canonical(d1) == canonical(d2)
