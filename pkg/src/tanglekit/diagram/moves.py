"""
Local rewrites: Reidemeister moves I-IV and the Delta move.

Sites are located through the faces of the plane graph. A face is an orbit
of ``d -> rotation(partner(d))`` on attachments; the face lies to the right
of each traversed arc.

These rewrites exist to manufacture equivalent diagram pairs for property
tests; they are purely combinatorial and do not check embeddings beyond the
face structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import PatternMismatch
from .core import LABELS, Diagram, dissolve, rotation

__all__ = [
    "faces",
    "R1Insert",
    "R1Delete",
    "R2Insert",
    "R2Delete",
    "R3Site",
    "R4Site",
    "find_sites",
    "reidemeister_apply",
    "delta_sites",
    "delta_move",
    "euler_ok",
]


def faces(d: Diagram) -> list[list[tuple]]:
    """All faces as lists of darts (attachments), free loops excluded."""
    part = d.partner
    seen = set()
    out = []
    for start in sorted(part):
        if start in seen:
            continue
        face = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            cur = rotation(part[cur])
        out.append(face)
    return out


def _components(d: Diagram) -> int:
    """Connected components of the underlying graph (vertices = crossings and boundaries)."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in d.arcs:
        parent[find((u[0], u[1]))] = find((v[0], v[1]))
    for c in range(d.crossings):
        find(("x", c))
    for b in range(d.boundaries):
        find(("b", b))
    return len({find(x) for x in list(parent)})


def euler_ok(d: Diagram) -> bool:
    """Check ``V - E + F = 2`` on every connected component (planarity test)."""
    v = d.crossings + d.boundaries
    if v == 0:
        return True
    e = len(d.arcs)
    f = len(faces(d))
    return v - e + f == 2 * _components(d)


# ---------------------------------------------------------------------------
# site records


@dataclass(frozen=True)
class R1Insert:
    """Kink on the arc starting at ``end``; the loop uses ports ``port, port+1``."""

    end: tuple
    port: int


@dataclass(frozen=True)
class R1Delete:
    crossing: int


@dataclass(frozen=True)
class R2Insert:
    """Push the arc leaving dart ``x`` across the arc leaving dart ``y`` (same face)."""

    x: tuple
    y: tuple
    over: bool = True


@dataclass(frozen=True)
class R2Delete:
    c: int
    d: int


@dataclass(frozen=True)
class R3Site:
    crossings: tuple[int, int, int]


@dataclass(frozen=True)
class R4Site:
    """Loop the arc leaving dart ``x`` around ``hole``, entering at the corner after ``label``."""

    hole: int
    label: str
    x: tuple
    over: bool = True


# ---------------------------------------------------------------------------
# helpers


def _rebuild(d: Diagram, partner: dict, crossings: int, loops: int | None = None) -> Diagram:
    arcs = []
    seen = set()
    for u, v in partner.items():
        if u in seen:
            continue
        seen.add(u)
        seen.add(v)
        arcs.append((u, v))
    return Diagram(crossings, tuple(arcs), d.free_loops if loops is None else loops,
                   d.boundaries, d.planarity_verified)


def _link(partner: dict, u, v) -> None:
    partner[u] = v
    partner[v] = u


def _over(att) -> bool:
    return att[0] == "x" and att[2] % 2 == 0


# ---------------------------------------------------------------------------
# R-I


def _r1_insert(d: Diagram, site: R1Insert) -> Diagram:
    part = dict(d.partner)
    if site.end not in part or site.port not in range(4):
        raise PatternMismatch("R-I site does not name an arc end")
    u, v = site.end, part[site.end]
    c, i = d.crossings, site.port
    _link(part, u, ("x", c, (i + 2) % 4))
    _link(part, ("x", c, i), ("x", c, (i + 1) % 4))
    _link(part, ("x", c, (i + 3) % 4), v)
    return _rebuild(d, part, c + 1)


def _r1_loop_port(d: Diagram, c: int):
    for i in range(4):
        if d.partner.get(("x", c, i)) == ("x", c, (i + 1) % 4):
            return i
    return None


def _r1_delete(d: Diagram, site: R1Delete) -> Diagram:
    if not 0 <= site.crossing < d.crossings or _r1_loop_port(d, site.crossing) is None:
        raise PatternMismatch("crossing does not carry a kink")
    return dissolve(d, [site.crossing])


# ---------------------------------------------------------------------------
# R-II


def _same_face(d: Diagram, x, y) -> bool:
    part = d.partner
    cur = rotation(part[x])
    while cur != x:
        if cur == y:
            return True
        cur = rotation(part[cur])
    return False


def _r2_insert(d: Diagram, site: R2Insert) -> Diagram:
    part = dict(d.partner)
    x, y = site.x, site.y
    if x not in part or y not in part:
        raise PatternMismatch("R-II darts do not exist")
    x2, y2 = part[x], part[y]
    if y in (x, x2) or not _same_face(d, x, y):
        raise PatternMismatch("R-II needs two distinct arcs on one face")
    c, e = d.crossings, d.crossings + 1
    s = 0 if site.over else 1

    def P(k, p):
        return ("x", k, (p + s) % 4)

    # port roles for the pushing strand: 0 toward its start, 2 toward its end
    _link(part, x, P(c, 0))
    _link(part, P(c, 2), P(e, 2))
    _link(part, P(e, 0), x2)
    _link(part, y, P(e, 3))
    _link(part, P(e, 1), P(c, 3))
    _link(part, P(c, 1), y2)
    return _rebuild(d, part, d.crossings + 2)


def _bigon_ok(d: Diagram, c: int, e: int) -> bool:
    part = d.partner
    for p in range(4):
        a = ("x", c, p)
        pa = part[a]
        if pa[0] != "x" or pa[1] != e or c == e:
            continue
        b = rotation(pa)
        pb = part[b]
        if pb[0] == "x" and pb[1] == c and rotation(pb) == a:
            if _over(a) == _over(pa):
                return True
    return False


def _r2_delete(d: Diagram, site: R2Delete) -> Diagram:
    c, e = site.c, site.d
    if c == e or not (0 <= c < d.crossings and 0 <= e < d.crossings) or not _bigon_ok(d, c, e):
        raise PatternMismatch("no removable bigon between the crossings")
    return dissolve(d, [c, e])


# ---------------------------------------------------------------------------
# triangles: R-III and Delta


def _triangle(d: Diagram, trio):
    """Return the in-port table of a triangular face on ``trio`` or None."""
    trio = tuple(trio)
    if len(set(trio)) != 3 or not all(0 <= c < d.crossings for c in trio):
        return None
    part = d.partner
    for c in trio:
        for p in range(4):
            x0 = ("x", c, p)
            darts = [x0]
            cur = x0
            for _ in range(3):
                cur = rotation(part[cur])
                darts.append(cur)
            if darts[3] != x0:
                continue
            cs = [a[1] if a[0] == "x" else None for a in darts[:3]]
            if None in cs or set(cs) != set(trio):
                continue
            inn = {}
            for k in range(3):
                u, v = darts[k], part[darts[k]]
                if v[0] != "x":
                    break
                inn[(u[1], v[1])] = u[2]
                inn[(v[1], u[1])] = v[2]
            else:
                return inn
    return None


def _over_counts(d: Diagram, inn) -> list[int]:
    counts = []
    for (u, v), p in inn.items():
        if u < v:
            counts.append(int(p % 2 == 0) + int(inn[(v, u)] % 2 == 0))
    return sorted(counts)


def _flip_triangle(d: Diagram, inn) -> Diagram:
    part = d.partner
    new = dict(part)
    out_port = {key: ("x", key[0], (p + 2) % 4) for key, p in inn.items()}
    in_port = {key: ("x", key[0], p) for key, p in inn.items()}
    out_owner = {att: key for key, att in out_port.items()}
    for (u, v) in inn:
        if u < v:
            _link(new, out_port[(u, v)], out_port[(v, u)])
    for (u, v) in inn:
        ext = part[out_port[(v, u)]]
        if ext in out_owner:
            w, t = out_owner[ext]
            ext = in_port[(t, w)]
        new[in_port[(u, v)]] = ext
        new[ext] = in_port[(u, v)]
    return _rebuild(d, new, d.crossings)


def _r3(d: Diagram, site: R3Site) -> Diagram:
    inn = _triangle(d, site.crossings)
    if inn is None or _over_counts(d, inn) != [0, 1, 2]:
        raise PatternMismatch("crossings do not bound an R-III triangle")
    return _flip_triangle(d, inn)


def delta_sites(d: Diagram) -> list[tuple[int, int, int]]:
    """Triangular faces whose three strands are each over exactly once."""
    return [s.crossings for s in _triangle_sites(d) if _over_counts(d, _triangle(d, s.crossings)) == [1, 1, 1]]


def delta_move(l: Diagram, site) -> Diagram:
    """Apply the Delta move on the triangle spanned by three crossings.

    Raises:
        PatternMismatch: the crossings do not bound a triangular face with
            the alternating over/under pattern.
    """
    trio = site.crossings if isinstance(site, R3Site) else tuple(site)
    inn = _triangle(l, trio)
    if inn is None or _over_counts(l, inn) != [1, 1, 1]:
        raise PatternMismatch("crossings do not bound a Delta triangle")
    return _flip_triangle(l, inn)


def _triangle_sites(d: Diagram) -> list[R3Site]:
    out = set()
    for face in faces(d):
        if len(face) == 3 and all(a[0] == "x" for a in face):
            trio = tuple(sorted(a[1] for a in face))
            if len(set(trio)) == 3 and _triangle(d, trio) is not None:
                out.add(trio)
    return [R3Site(t) for t in sorted(out)]


# ---------------------------------------------------------------------------
# R-IV


def _r4(d: Diagram, site: R4Site) -> Diagram:
    h, lab, x = site.hole, site.label, site.x
    if not 1 <= h < d.boundaries or lab not in LABELS:
        raise PatternMismatch("R-IV needs a hole")
    corner = ("b", h, lab)
    part = d.partner
    first = rotation(corner)
    if x not in part or (x != first and not _same_face(d, x, first)):
        raise PatternMismatch("arc and hole corner are not on one face")
    if any(a[0] == "b" and a[1] == h for a in (x, part[x])):
        raise PatternMismatch("the looped arc must not end on the hole")
    new = dict(part)
    xend = new[x]
    base = d.crossings
    s = 0 if site.over else 1
    spoke = rotation(corner)
    prev = x
    for k in range(4):
        c = base + k

        def P(p):
            return ("x", c, (p + s) % 4)

        # roles: 0 forward, 1 toward the hole, 2 back, 3 away from the hole
        far = new[spoke]
        _link(new, spoke, P(1))
        _link(new, P(3), far)
        _link(new, prev, P(2))
        prev = P(0)
        spoke = rotation(spoke)
    _link(new, prev, xend)
    return _rebuild(d, new, base + 4)


# ---------------------------------------------------------------------------
# dispatch


def reidemeister_apply(d: Diagram, move: str, site) -> Diagram:
    """Rewrite ``d`` by Reidemeister move ``move`` at ``site``.

    Args:
        d: diagram (any boundary count).
        move: ``"I"``, ``"II"``, ``"III"`` or ``"IV"``.
        site: a site record for the move; insertions and deletions of I and
            II are distinguished by the record type.

    Raises:
        PatternMismatch: the site does not match the move.
    """
    table = {
        ("I", R1Insert): _r1_insert,
        ("I", R1Delete): _r1_delete,
        ("II", R2Insert): _r2_insert,
        ("II", R2Delete): _r2_delete,
        ("III", R3Site): _r3,
        ("IV", R4Site): _r4,
    }
    fn = table.get((move, type(site)))
    if fn is None:
        raise PatternMismatch(f"site {site!r} does not belong to move {move}")
    return fn(d, site)


def find_sites(d: Diagram, move: str) -> list:
    """Enumerate valid sites for ``move`` (insertions, plus deletions for I/II)."""
    part = d.partner
    if move == "I":
        ins = [R1Insert(a, p) for a in sorted(part) for p in range(4)]
        dels = [R1Delete(c) for c in range(d.crossings) if _r1_loop_port(d, c) is not None]
        return ins + dels
    if move == "II":
        out = []
        for face in faces(d):
            for i, x in enumerate(face):
                for y in face[i + 1:]:
                    if y not in (x, part[x]):
                        out.append(R2Insert(x, y, True))
                        out.append(R2Insert(x, y, False))
        for c in range(d.crossings):
            for e in range(c + 1, d.crossings):
                if _bigon_ok(d, c, e):
                    out.append(R2Delete(c, e))
        return out
    if move == "III":
        return [s for s in _triangle_sites(d) if _over_counts(d, _triangle(d, s.crossings)) == [0, 1, 2]]
    if move == "IV":
        out = []
        for face in faces(d):
            for a in face:
                if a[0] == "b" and a[1] >= 1:
                    prev_label = _prev_label(a)
                    for x in face:
                        if any(b[0] == "b" and b[1] == a[1] for b in (x, part[x])):
                            continue
                        out.append(R4Site(a[1], prev_label, x, True))
                        out.append(R4Site(a[1], prev_label, x, False))
        return out
    raise ValueError(f"unknown move {move!r}")


def _prev_label(a) -> str:
    """Label whose counterclockwise successor at the hole is ``a``."""
    for lab in LABELS:
        if rotation(("b", a[1], lab)) == a:
            return lab
    raise AssertionError("unreachable")


def iter_faces_with_hole(d: Diagram) -> Iterator:
    for face in faces(d):
        if any(a[0] == "b" and a[1] >= 1 for a in face):
            yield face
