"""Tests for Reidemeister and Delta rewrites and for linking data."""

from __future__ import annotations

import random

import pytest

from tanglekit.bracket import bracket
from tanglekit.diagram import build as B
from tanglekit.diagram.linking import component_count, components, linking_matrix, writhe
from tanglekit.diagram.moves import (
    R1Delete,
    R2Delete,
    R2Insert,
    R3Site,
    delta_move,
    delta_sites,
    euler_ok,
    faces,
    find_sites,
    reidemeister_apply,
)
from tanglekit.errors import PatternMismatch
from tanglekit.invariants import inv_Fn
from tanglekit.testkit import GenConfig, gen_link, gen_punctured, gen_spherical


def _links(n, max_crossings=9):
    return [gen_link(GenConfig(seed=s, max_crossings=max_crossings, depth=5)) for s in range(n)]


def test_faces_satisfy_euler():
    for l in _links(60):
        assert euler_ok(l)
        assert sum(len(f) for f in faces(l)) == 4 * l.crossings + 4 * l.boundaries


def test_r1_changes_phase_only():
    for seed, l in enumerate(_links(40)):
        if not l.arcs:
            continue
        rng = random.Random(seed)
        ins = [s for s in find_sites(l, "I") if not isinstance(s, R1Delete)]
        k = reidemeister_apply(l, "I", rng.choice(ins))
        assert k.crossings == l.crossings + 1
        assert euler_ok(k)
        assert bracket(k).magnitude == bracket(l).magnitude


def test_r1_insert_then_delete():
    l = B.numerator_closure(B.htwist(3))
    k = reidemeister_apply(l, "I", find_sites(l, "I")[0])
    dels = [s for s in find_sites(k, "I") if isinstance(s, R1Delete)]
    assert any(reidemeister_apply(k, "I", s) == l or
               bracket(reidemeister_apply(k, "I", s)) == bracket(l) for s in dels)


def test_r2_preserves_bracket_exactly():
    for seed, l in enumerate(_links(60)):
        ins = [s for s in find_sites(l, "II") if isinstance(s, R2Insert)]
        if not ins:
            continue
        k = reidemeister_apply(l, "II", random.Random(seed).choice(ins))
        assert euler_ok(k)
        assert bracket(k) == bracket(l)


def test_r2_insert_then_delete_restores():
    for seed, l in enumerate(_links(30)):
        ins = [s for s in find_sites(l, "II") if isinstance(s, R2Insert)]
        if not ins:
            continue
        k = reidemeister_apply(l, "II", random.Random(seed).choice(ins))
        n = l.crossings
        back = reidemeister_apply(k, "II", R2Delete(n, n + 1))
        assert back == l


def test_r3_preserves_bracket_exactly():
    seen = 0
    for l in _links(300, 12):
        for site in find_sites(l, "III"):
            k = reidemeister_apply(l, "III", site)
            assert euler_ok(k)
            assert bracket(k) == bracket(l)
            seen += 1
    assert seen > 0


def test_r4_preserves_invariant():
    seen = 0
    for seed in range(40):
        s = gen_spherical(GenConfig(seed=seed, max_crossings=6))
        sites = find_sites(s, "IV")
        if not sites:
            continue
        site = random.Random(seed).choice(sites)
        k = reidemeister_apply(s, "IV", site)
        assert k.crossings == s.crossings + 4
        assert euler_ok(k)
        assert inv_Fn(k).mat == inv_Fn(s).mat
        seen += 1
    assert seen >= 10


def test_r4_on_two_holes():
    for seed in range(10):
        t = gen_punctured(GenConfig(seed=seed, max_crossings=5), 2)
        sites = find_sites(t, "IV")
        if sites:
            k = reidemeister_apply(t, "IV", sites[seed % len(sites)])
            assert inv_Fn(k).mat == inv_Fn(t).mat


def test_mismatched_site_raises():
    l = B.numerator_closure(B.htwist(3))
    with pytest.raises(PatternMismatch):
        reidemeister_apply(l, "III", R3Site((0, 1, 2)))
    with pytest.raises(PatternMismatch):
        reidemeister_apply(l, "II", R1Delete(0))
    # alternating triangles are Delta sites, not R-III sites
    assert (0, 1, 2) in delta_sites(l)
    with pytest.raises(PatternMismatch):
        delta_move(B.numerator_closure(B.htwist(2)), (0, 1, 2))


def _delta_links():
    out = []
    for l in _links(600, 12):
        if delta_sites(l):
            out.append(l)
    return out


def test_delta_is_an_involution():
    ls = _delta_links()
    assert len(ls) >= 10
    for l in ls:
        site = delta_sites(l)[0]
        k = delta_move(l, site)
        assert euler_ok(k)
        assert site in delta_sites(k)
        assert delta_move(k, site) == l


def test_delta_preserves_linking_and_components():
    for l in _delta_links():
        k = delta_move(l, delta_sites(l)[0])
        assert component_count(k) == component_count(l)
        assert linking_matrix(k) == linking_matrix(l)
        # brackets agree in magnitude mod 4 up to sign
        a, b = bracket(l).mag, bracket(k).mag
        assert (a - b) % 4 == 0 or (a + b) % 4 == 0


def test_linking_examples():
    hopf = B.numerator_closure(B.htwist(2))
    assert len(components(hopf)) == 2
    lk = linking_matrix(hopf)
    assert lk[0][1] == lk[1][0] == 1
    assert writhe(hopf) == 2
    unlink = B.denominator_closure(B.fundamental_tangle(1))
    assert component_count(unlink) == 2
    assert all(x == 0 for row in linking_matrix(unlink) for x in row)
    flipped = linking_matrix(hopf, orientation=[1, -1])
    assert flipped[0][1] == -1
