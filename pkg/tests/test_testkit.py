"""Tests for the seeded generators and the move decorator."""

from __future__ import annotations

from tanglekit.diagram import build as B
from tanglekit.diagram.linking import components
from tanglekit.diagram.moves import euler_ok
from tanglekit.invariants import inv_F
from tanglekit.testkit import (
    SCAN_KINDS,
    GenConfig,
    MoveLog,
    decorate,
    gen_ball,
    gen_closed_spherical,
    gen_link,
    gen_punctured,
    gen_scan_spherical,
    gen_spherical,
    link_corpus,
)

ATOMS = [B.fundamental_tangle(1), B.fundamental_tangle(2)] + [
    f(n) for f in (B.htwist, B.vtwist) for n in (-3, -2, -1, 1, 2, 3)
]


def test_seed_determinism():
    for seed in range(20):
        cfg = GenConfig(seed=seed, max_crossings=12, allow_closed_components=seed % 2 == 0)
        assert gen_ball(cfg) == gen_ball(cfg)
        assert gen_spherical(cfg) == gen_spherical(cfg)
        assert gen_punctured(cfg, 3) == gen_punctured(cfg, 3)
        assert decorate(gen_link(cfg), cfg, 3) == decorate(gen_link(cfg), cfg, 3)


def test_depth_zero_is_atom():
    for seed in range(30):
        assert gen_ball(GenConfig(seed=seed, depth=0)) in ATOMS


def test_budgets_and_shapes():
    for seed in range(40):
        cfg = GenConfig(seed=seed, max_crossings=10)
        assert gen_ball(cfg).crossings <= 10
        assert gen_ball(cfg).boundaries == 1
        assert gen_spherical(cfg).boundaries == 2
        for n in range(4):
            assert gen_punctured(cfg, n).boundaries == n + 1


def test_closed_components_are_even():
    for seed in range(40):
        cfg = GenConfig(seed=seed, max_crossings=10, allow_closed_components=True)
        for s in (gen_spherical(cfg), gen_closed_spherical(cfg)):
            assert components(s), "expected a closed component"
            assert all(x % 2 == 0 for x in inv_F(s).flat())


def test_decorate():
    for seed in range(30):
        cfg = GenConfig(seed=seed, max_crossings=14)
        d = gen_spherical(GenConfig(seed=seed, max_crossings=6))
        assert decorate(d, cfg, budget=0) == d
        log = MoveLog()
        e = decorate(d, cfg, budget=3, log=log)
        assert euler_ok(e)
        assert len(log) <= 3
        assert inv_F(e) == inv_F(d)


def test_scan_kinds():
    for kind in SCAN_KINDS:
        s, k = gen_scan_spherical(GenConfig(seed=3, max_crossings=12), kind)
        assert k == kind and s.boundaries == 2


def test_link_corpus():
    c = link_corpus(6)
    assert c and all(l.crossings <= 6 and l.boundaries == 0 for l in c)
    assert len(link_corpus(10)) > len(c)
