"""
Seeded generators of planar diagrams and move decorators for property tests.

Generators only combine planarity-preserving constructors, so every output
is a genuine diagram. Each generator is a pure function of its
:class:`GenConfig`; the random stream is ``random.Random(seed)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from .diagram import build as B
from .diagram.core import Diagram
from .diagram.moves import (
    R1Insert,
    R2Insert,
    delta_move,
    delta_sites,
    faces,
    find_sites,
    reidemeister_apply,
)

__all__ = [
    "GenConfig",
    "MoveLog",
    "gen_ball",
    "gen_spherical",
    "gen_punctured",
    "gen_link",
    "gen_i_reducible",
    "gen_j_reducible",
    "gen_closed_spherical",
    "closed_component_ball",
    "decorate",
    "gen_scan_spherical",
    "SCAN_KINDS",
    "link_corpus",
]


@dataclass(frozen=True)
class GenConfig:
    """Generator settings.

    Attributes:
        seed: 64-bit seed of the random stream.
        max_crossings: crossing budget of each generated diagram.
        depth: nesting depth of the construction.
        allow_closed_components: insert hooked closed circles.
    """

    seed: int = 0
    max_crossings: int = 12
    depth: int = 3
    allow_closed_components: bool = False


@dataclass
class MoveLog:
    """Moves applied by :func:`decorate`, as ``(move, site)`` pairs."""

    entries: list = field(default_factory=list)

    def append(self, move: str, site) -> None:
        self.entries.append((move, site))

    def __len__(self) -> int:
        return len(self.entries)


def _rng(cfg: GenConfig, salt: int = 0) -> random.Random:
    return random.Random((cfg.seed * 1_000_003 + salt) & ((1 << 64) - 1))


def closed_component_ball(k: int = 1) -> Diagram:
    """Ball tangle with a closed circle clasped ``2k`` times around a strand."""
    return B.connect_h(B.vtwist(2 * k), B.fundamental_tangle(1))


def _atom(rng: random.Random, budget: int) -> Diagram:
    m = min(3, budget)
    kind = rng.randrange(4)
    if kind == 0 or m == 0:
        return B.fundamental_tangle(rng.choice((1, 2)))
    n = rng.randint(1, m) * rng.choice((1, -1))
    return B.htwist(n) if kind in (1, 2) else B.vtwist(n)


def _ball(rng: random.Random, depth: int, budget: int, closed: bool) -> Diagram:
    if closed and budget >= 2 and rng.random() < 0.3:
        d = closed_component_ball(1)
        return B.mirror(d) if rng.random() < 0.5 else d
    if depth <= 0 or budget <= 1 or rng.random() < 0.2:
        return _atom(rng, budget)
    op = rng.randrange(6)
    if op <= 2:
        left_budget = rng.randint(0, budget)
        a = _ball(rng, depth - 1, left_budget, closed)
        b = _ball(rng, depth - 1, budget - a.crossings, closed)
        return B.connect_h(a, b) if op < 2 else B.connect_v(a, b)
    d = _ball(rng, depth - 1, budget, closed)
    return (B.rotate_r, B.mirror, B.hflip)[op - 3](d)


def gen_ball(cfg: GenConfig) -> Diagram:
    """Random ball tangle with at most ``cfg.max_crossings`` crossings."""
    rng = _rng(cfg, 1)
    return _ball(rng, cfg.depth, cfg.max_crossings, cfg.allow_closed_components)


def gen_link(cfg: GenConfig) -> Diagram:
    """Numerator or denominator closure of a random ball tangle."""
    rng = _rng(cfg, 2)
    b = _ball(rng, cfg.depth, cfg.max_crossings, cfg.allow_closed_components)
    return B.numerator_closure(b) if rng.random() < 0.5 else B.denominator_closure(b)


_SUMS = ("h", "v", "inner-h", "inner-v")


def _attach(rng: random.Random, s: Diagram, b: Diagram) -> Diagram:
    which = rng.choice(_SUMS)
    side = rng.choice((1, 2))
    if which.startswith("inner"):
        return B.inner_sum(b, s, which[-1], side)
    return B.outer_sum(b, s, which, side)


def _reducible(rng: random.Random, core: Diagram, steps: int, budget: int, closed: bool) -> Diagram:
    s = core
    for _ in range(steps):
        room = budget - s.crossings
        if room < 0:
            break
        b = _ball(rng, 2, min(room, 5), closed)
        s = _attach(rng, s, b)
    return s


def gen_i_reducible(cfg: GenConfig) -> Diagram:
    """Identity annulus with ball tangles attached by the eight connect sums."""
    rng = _rng(cfg, 3)
    return _reducible(rng, B.identity_spherical(), rng.randint(0, cfg.depth + 1),
                      cfg.max_crossings, cfg.allow_closed_components)


def gen_j_reducible(cfg: GenConfig) -> tuple[Diagram, tuple[int, int, int, int]]:
    """A J tangle with ball tangles attached; also returns its twist counts."""
    rng = _rng(cfg, 4)
    ps = tuple(rng.randint(-1, 1) for _ in range(4))
    core = B.build_J(*ps)
    return _reducible(rng, core, rng.randint(0, max(cfg.depth - 1, 0)),
                      cfg.max_crossings, cfg.allow_closed_components), ps


def gen_closed_spherical(cfg: GenConfig) -> Diagram:
    """Spherical tangle guaranteed to contain a hooked closed component."""
    rng = _rng(cfg, 5)
    s = _spherical(rng, max(cfg.depth - 1, 0), max(cfg.max_crossings - 2, 0), False)
    ball = closed_component_ball(1)
    if rng.random() < 0.5:
        ball = B.mirror(ball)
    return _attach(rng, s, ball)


def _spherical(rng: random.Random, depth: int, budget: int, closed: bool) -> Diagram:
    if depth <= 0 or budget <= 1:
        return _reducible(rng, B.identity_spherical(), rng.randint(0, 2), budget, closed)
    op = rng.randrange(7)
    if op == 0:
        a = _spherical(rng, depth - 1, budget // 2, closed)
        b = _spherical(rng, depth - 1, budget - a.crossings, closed)
        return B.compose_spherical(a, b)
    if op == 1 and budget >= 4:
        ps = tuple(rng.randint(-1, 1) for _ in range(4))
        return _reducible(rng, B.build_J(*ps), rng.randint(0, 1), budget, closed)
    if op == 2:
        s = _spherical(rng, depth - 1, budget, closed)
        return rng.choice((B.mirror, B.swap, B.r1, B.r2, B.rotate_r))(s)
    return _reducible(rng, _spherical(rng, depth - 1, budget, closed),
                      rng.randint(1, 2), budget, closed)


def gen_spherical(cfg: GenConfig) -> Diagram:
    """Random spherical tangle from sums, compositions, J, and symmetries."""
    rng = _rng(cfg, 6)
    s = _spherical(rng, cfg.depth, cfg.max_crossings, cfg.allow_closed_components)
    if cfg.allow_closed_components:
        ball = closed_component_ball(1)
        s = _attach(rng, s, B.mirror(ball) if rng.random() < 0.5 else ball)
    return s


def gen_punctured(cfg: GenConfig, n: int) -> Diagram:
    """Random tangle with ``n`` holes.

    Spherical pieces (each carrying one hole) and ball tangles are combined
    with horizontal and vertical sums, then symmetrized.
    """
    rng = _rng(cfg, 7 + n)
    if n == 0:
        return _ball(rng, cfg.depth, cfg.max_crossings, cfg.allow_closed_components)
    budget = cfg.max_crossings
    parts = []
    for k in range(n):
        share = budget // (n - k + 1)
        s = _spherical(rng, max(cfg.depth - 2, 0), share, cfg.allow_closed_components)
        budget -= s.crossings
        parts.append(s)
    while budget > 0 and rng.random() < 0.6:
        b = _ball(rng, 1, min(budget, 3), cfg.allow_closed_components)
        budget -= b.crossings
        parts.insert(rng.randrange(len(parts) + 1), b)
    t = parts[0]
    for p in parts[1:]:
        t = B.connect_h(t, p) if rng.random() < 0.5 else B.connect_v(t, p)
    if rng.random() < 0.5:
        t = rng.choice((B.mirror, B.rotate_r, B.hflip, B.vflip))(t)
    return t


# ---------------------------------------------------------------------------
# decoration

def decorate(
    d: Diagram,
    cfg: GenConfig,
    budget: int = 2,
    include_delta: bool = False,
    log: MoveLog | None = None,
) -> Diagram:
    """Apply ``budget`` random rewrites.

    Reidemeister I/II/III/IV insertions are drawn where sites exist; with
    ``include_delta`` a Delta move is preferred whenever the diagram has a
    Delta triangle. Nothing is applied when ``budget`` is 0.

    Args:
        d: diagram to decorate.
        cfg: supplies the seed; ``max_crossings`` caps growth.
        budget: number of moves to attempt.
        include_delta: allow Delta moves.
        log: receives ``(move, site)`` pairs.
    """
    rng = _rng(cfg, 11)
    for _ in range(budget):
        if include_delta:
            ds = delta_sites(d)
            if ds:
                site = rng.choice(ds)
                d = delta_move(d, site)
                if log is not None:
                    log.append("delta", site)
                continue
        room = cfg.max_crossings - d.crossings
        options = []
        if room >= 1:
            options.append("I")
        if room >= 2:
            options.append("II")
        if find_sites(d, "III"):
            options.append("III")
        if room >= 4 and d.boundaries >= 2:
            options.append("IV")
        if not options or not d.arcs:
            break
        move = rng.choice(options)
        site = _pick_site(rng, d, move)
        if site is None:
            continue
        d = reidemeister_apply(d, move, site)
        if log is not None:
            log.append(move, site)
    return d


def _pick_site(rng: random.Random, d: Diagram, move: str):
    part = d.partner
    if move == "I":
        return R1Insert(rng.choice(sorted(part)), rng.randrange(4))
    if move == "II":
        fs = [f for f in faces(d) if len(f) >= 2]
        rng.shuffle(fs)
        for f in fs:
            pairs = [(x, y) for i, x in enumerate(f) for y in f[i + 1:] if y not in (x, part[x])]
            if pairs:
                x, y = rng.choice(pairs)
                return R2Insert(x, y, rng.random() < 0.5)
        return None
    sites = find_sites(d, move)
    return rng.choice(sites) if sites else None


def link_corpus(max_crossings: int = 10) -> list[Diagram]:
    """Deterministic link diagrams for exhaustive checks.

    Closures of single twists, of horizontal and vertical sums of two
    twists, and of rotated and mirrored three-term sums, plus kinked,
    split, and closed-component examples.
    """
    atoms = [B.htwist(p) for p in range(-5, 6)] + [B.vtwist(q) for q in range(-5, 6) if q]
    out = []

    def add(b: Diagram):
        for close in (B.numerator_closure, B.denominator_closure):
            l = close(b)
            if l.crossings <= max_crossings:
                out.append(l)

    for a in atoms:
        add(a)
    for a in atoms:
        for b in atoms:
            add(B.connect_h(a, b))
            add(B.connect_v(a, b))
    small = [B.htwist(p) for p in (-2, -1, 1, 2)] + [B.vtwist(q) for q in (-2, 2)]
    for a in small:
        for b in small:
            for c in small:
                add(B.connect_v(B.connect_h(a, b), c))
                add(B.rotate_r(B.connect_h(a, B.mirror(B.connect_v(b, c)))))
    add(closed_component_ball(1))
    add(B.connect_h(closed_component_ball(2), B.htwist(3)))
    for ps in [(1, 1, 1, 1), (1, -1, 1, 0), (0, 1, 1, 0)]:
        add(B.fill_hole(B.build_J(*ps), [B.htwist(1)]))
    return out


SCAN_KINDS = ("i-reducible", "j-reducible", "composed", "closed", "decorated")


def gen_scan_spherical(cfg: GenConfig, kind: str | None = None) -> tuple[Diagram, str]:
    """Spherical tangle drawn from a mix of families.

    Args:
        cfg: generator settings.
        kind: one of :data:`SCAN_KINDS`; drawn from the seed when omitted.

    Returns:
        The diagram and the family it was drawn from.
    """
    rng = _rng(cfg, 13)
    kind = kind or rng.choice(SCAN_KINDS)
    if kind == "i-reducible":
        s = gen_i_reducible(cfg)
    elif kind == "j-reducible":
        s = gen_j_reducible(cfg)[0]
    elif kind == "composed":
        s = gen_spherical(replace(cfg, allow_closed_components=False))
    elif kind == "closed":
        s = gen_closed_spherical(cfg)
    elif kind == "decorated":
        base = gen_spherical(replace(cfg, max_crossings=max(cfg.max_crossings - 6, 0)))
        s = decorate(base, cfg, budget=rng.randint(1, 3), include_delta=rng.random() < 0.5)
    else:
        raise ValueError(f"unknown family {kind!r}")
    return s, kind
