"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All checks are exact integer or ring equalities. The only tolerances are
the wall-clock budgets, pinned below.
"""

from __future__ import annotations

import itertools
import random
import time

import numpy as np
import pytest

from tanglekit.bracket import (
    State,
    bracket,
    bracket_full,
    bracket_monocyclic,
    bracket_skein,
    loop_count,
)
from tanglekit.diagram import build as B
from tanglekit.diagram.core import isomorphic
from tanglekit.diagram.linking import components
from tanglekit.diagram.moves import delta_move, delta_sites
from tanglekit.invariants import (
    bt_R,
    bt_star,
    bt_sum_h,
    bt_sum_v,
    compose_law_check,
    delta_congruence_check,
    det_residue,
    inv_F,
    inv_f,
    inv_Fn,
    is_square,
    j_formula,
    krebes_check,
    mat_minus,
    mat_R,
    mat_r1,
    mat_r2,
    mat_star,
    mat_sum,
)
from tanglekit.phi import ProjMatrix, det2, proj_matmul
from tanglekit.synth import synth_ball
from tanglekit.testkit import (
    SCAN_KINDS,
    GenConfig,
    closed_component_ball,
    decorate,
    gen_ball,
    gen_closed_spherical,
    gen_i_reducible,
    gen_j_reducible,
    gen_link,
    gen_punctured,
    gen_scan_spherical,
    gen_spherical,
    link_corpus,
)

# pinned budgets (seconds)
BUDGET_TRIAD = 300.0
BUDGET_COMPOSE = 600.0
BUDGET_SYNTH = 120.0

# pinned sample sizes
TRIAD_SAMPLES = 10_000
COMPOSE_SAMPLES = 1_000
KREBES_SAMPLES = 500
SYMMETRY_SAMPLES = 200
FUNCTOR_SAMPLES = 500
SCAN_SAMPLES = 5_000
DELTA_SAMPLES = 500
SYNTH_RANDOM = 200

T1, T2 = B.fundamental_tangle(1), B.fundamental_tangle(2)


RESULTS: dict[int, str] = {}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, detail


def col(p: int, q: int) -> ProjMatrix:
    return ProjMatrix.column((p, q))


def mat(a: int, g: int, b: int, d: int) -> ProjMatrix:
    return ProjMatrix(((a, g), (b, d)))


def test_01_bracket_triad():
    t0 = time.perf_counter()
    corpus = link_corpus(10)
    bad = [i for i, l in enumerate(corpus)
           if not bracket_full(l) == bracket_monocyclic(l) == bracket_skein(l)]
    sampled = 0
    for seed in range(TRIAD_SAMPLES):
        l = gen_link(GenConfig(seed=seed, max_crossings=20, depth=8))
        if l.crossings == 0 and l.free_loops == 0:
            l = l.with_loops(1)
        assert l.crossings <= 20
        if not bracket_full(l) == bracket_monocyclic(l) == bracket_skein(l):
            bad.append(("seed", seed))
        sampled += 1
    elapsed = time.perf_counter() - t0
    report(1, not bad and elapsed <= BUDGET_TRIAD,
           f"{len(corpus)} corpus + {sampled} sampled diagrams, {len(bad)} mismatches, "
           f"{elapsed:.1f}s (budget {BUDGET_TRIAD:.0f}s)")


def test_02_golden_values():
    mag = lambda l: bracket(l).magnitude
    f = lambda b: inv_f(b).vec
    i = B.identity_spherical()
    b = B.connect_v(B.htwist(1), i)
    checks = {
        "unknot": mag(B.numerator_closure(T1)) == 1,
        "2-unlink": bracket(B.denominator_closure(T1)).is_zero(),
        "Hopf": mag(B.numerator_closure(B.htwist(2))) == 2,
        "trefoil": mag(B.numerator_closure(B.htwist(3))) == 3,
        "figure-eight": mag(B.numerator_closure(B.connect_h(B.vtwist(2), B.htwist(2)))) == 5,
        "f(t1)": f(T1) == col(1, 0),
        "f(t2)": f(T2) == col(0, 1),
        "f(t1 +h t1)": f(B.connect_h(T1, T1)) == col(0, 0),
        "f(h(p))": all(f(B.htwist(p)) == col(p, 1) for p in range(-8, 9)),
        "f(v(q))": all(f(B.vtwist(q)) == col(1, q) for q in range(-8, 9)),
        "f(h(1) +h h(1))": f(B.connect_h(B.htwist(1), B.htwist(1))) == col(2, 1),
        "[3;0] = [1;3] +h [1;0]": f(B.connect_h(B.vtwist(3), T1)) == col(3, 0)
        == bt_sum_h(col(1, 3), col(1, 0)),
        "F(I)": inv_F(i) == mat(1, 0, 0, 1),
        "F(b o b)": inv_F(B.compose_spherical(b, b)) == mat(1, 0, 2, 1),
        "F zero example": inv_F(B.connect_h(B.connect_h(T1, T1), i)).is_zero(),
    }
    failed = [k for k, v in checks.items() if not v]
    report(2, not failed, f"{len(checks)} golden values, failed: {failed or 'none'}")


def test_03_composition_law():
    t0 = time.perf_counter()
    bad = []
    for n in (1, 2, 3):
        for seed in range(COMPOSE_SAMPLES):
            t = gen_punctured(GenConfig(seed=seed, max_crossings=10), n)
            fills = [gen_ball(GenConfig(seed=seed * 31 + k, max_crossings=4)) for k in range(n)]
            if not compose_law_check(t, fills):
                bad.append((n, seed))
    elapsed = time.perf_counter() - t0
    report(3, not bad and elapsed <= BUDGET_COMPOSE,
           f"{3 * COMPOSE_SAMPLES} (t, fills) for n=1,2,3, {len(bad)} failures, "
           f"{elapsed:.1f}s (budget {BUDGET_COMPOSE:.0f}s)")


def _krebes_fill(rng: random.Random, seed: int):
    r = rng.random()
    if r < 0.15:
        return B.connect_h(T1, T1)  # [0;0]
    if r < 0.45:
        k = rng.randint(2, 4)
        return B.connect_h(B.vtwist(k), T1) if rng.random() < 0.5 else B.rotate_r(
            B.connect_h(B.vtwist(k), T1))
    if r < 0.6:
        return closed_component_ball(1)
    return gen_ball(GenConfig(seed=seed, max_crossings=5))


def test_04_generalized_krebes():
    bad, zero_forced, nontrivial = [], 0, 0
    for k in (1, 2, 3):
        for seed in range(KREBES_SAMPLES):
            rng = random.Random(seed * 7 + k)
            t = gen_punctured(GenConfig(seed=seed, max_crossings=8), k)
            fills = [_krebes_fill(rng, seed * 13 + j) for j in range(k)]
            filled = B.fill_hole(t, fills)
            close = B.numerator_closure if rng.random() < 0.5 else B.denominator_closure
            link = close(filled)
            lb = bracket(link)
            invs = [inv_f(b) for b in fills]
            if not krebes_check(invs, lb):
                bad.append((k, seed))
            g = 1
            for v in invs:
                g *= np.gcd.reduce(np.abs(v.vec.flat()))
            zero_forced += g == 0
            nontrivial += g > 1
    report(4, not bad,
           f"{3 * KREBES_SAMPLES} assemblies (k=1,2,3), {len(bad)} failures, "
           f"{zero_forced} zero-gcd and {nontrivial} gcd>1 cases")


def test_05_surjectivity():
    t0 = time.perf_counter()
    bad = []
    targets = [(b, a) for a in range(-30, 31) for b in range(-30, 31)]
    rng = random.Random(2024)
    targets += [(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)) for _ in range(SYNTH_RANDOM)]
    for p, q in targets:
        d, _ = synth_ball((p, q))
        if inv_f(d).vec != col(p, q):
            bad.append((p, q))
    elapsed = time.perf_counter() - t0
    report(5, not bad and elapsed <= BUDGET_SYNTH,
           f"{len(targets)} targets, {len(bad)} failures, {elapsed:.1f}s (budget {BUDGET_SYNTH:.0f}s)")


def _ball(seed, c=5):
    return gen_ball(GenConfig(seed=seed, max_crossings=c))


def _sph(seed, c=7):
    return gen_spherical(GenConfig(seed=seed, max_crossings=c))


def test_06_symmetry_and_sums():
    counts: dict[str, int] = {}
    bad: list[str] = []

    def check(name: str, ok: bool):
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            bad.append(name)

    R = B.rotate_r
    for seed in range(SYMMETRY_SAMPLES):
        x, y = _ball(seed), _ball(seed + 10_000)
        fx, fy = inv_f(x), inv_f(y)
        check("2.12 +h", inv_f(B.connect_h(x, y)).vec == bt_sum_h(fx, fy))
        check("(2*) +v", inv_f(B.connect_v(x, y)).vec == bt_sum_v(fx, fy))
        check("2.13 mirror", inv_f(B.mirror(x)).vec == bt_star(fx))
        check("2.13 rotate", inv_f(R(x)).vec == bt_R(fx))

        s = _sph(seed)
        m = inv_F(s)
        for name, op, mop in (("*", B.mirror, mat_star), ("-", B.swap, mat_minus),
                              ("r1", B.r1, mat_r1), ("r2", B.r2, mat_r2), ("R", R, mat_R)):
            check(f"4.11 {name}", inv_F(op(s)) == mop(m))

        s1, s2 = _sph(seed, 5), _sph(seed + 20_000, 5)
        c = B.compose_spherical
        check("4.12 *", inv_F(B.mirror(c(s1, s2))) == inv_F(c(B.mirror(s1), B.mirror(s2))))
        check("4.12 -", inv_F(B.swap(c(s1, s2))) == inv_F(c(B.swap(s2), B.swap(s1))))
        check("4.12 r1", inv_F(B.r1(c(s1, s2))) == inv_F(c(s1, B.r1(s2))))
        check("4.12 r2", inv_F(B.r2(c(s1, s2))) == inv_F(c(B.r2(s1), s2)))
        check("4.12 R", inv_F(R(c(s1, s2))) == inv_F(c(R(s1), R(s2))))

        b = _ball(seed + 30_000, 4)
        s = _sph(seed + 40_000, 6)
        hs = lambda u, v: B.connect_h(u, v)
        vs = lambda u, v: B.connect_v(u, v)
        check("4.16 (1)", isomorphic(R(hs(b, s)), vs(R(s), R(b))))
        check("4.16 (2)", isomorphic(R(hs(s, b)), vs(R(b), R(s))))
        check("4.16 (3)", isomorphic(R(vs(b, s)), hs(R(b), R(s))))
        check("4.16 (4)", isomorphic(R(vs(s, b)), hs(R(s), R(b))))
        check("4.17 (1)", isomorphic(hs(s, b), R(hs(R(b, 2), R(s, 2)), 2)))
        check("4.17 (2)", isomorphic(vs(b, s), R(hs(R(b), R(s)), 3)))
        check("4.17 (3)", isomorphic(vs(s, b), R(hs(R(b, 3), R(s, 3)))))

        v, m = inv_f(b), inv_F(s)
        p, q = v.vec.col(0)
        for which, scale in (("h", q), ("v", p)):
            expect = mat_sum(v, m, which)
            for side in (1, 2):
                check(f"4.18 outer {which} side {side}", inv_F(B.outer_sum(b, s, which, side)) == expect)
            check(f"4.18 outer {which} det", det2(expect) == scale**2 * det2(m))
            expect = mat_sum(v, m, "inner-" + which)
            for side in (1, 2):
                check(f"4.18 inner {which} side {side}", inv_F(B.inner_sum(b, s, which, side)) == expect)
            check(f"4.18 inner {which} det", det2(expect) == scale**2 * det2(m))
    short = min(counts.values())
    report(6, not bad and short >= SYMMETRY_SAMPLES,
           f"{len(counts)} identities x {short} instances, failures: {sorted(set(bad)) or 'none'}")


def test_07_functoriality():
    bad = 0
    for seed in range(FUNCTOR_SAMPLES):
        s1, s2 = _sph(seed, 7), _sph(seed + 50_000, 7)
        if inv_F(B.compose_spherical(s2, s1)) != proj_matmul(inv_F(s2), inv_F(s1)):
            bad += 1
    report(7, bad == 0, f"{FUNCTOR_SAMPLES} spherical pairs, {bad} failures")


def test_08_j_family():
    bad_formula = [ps for ps in itertools.product(range(-2, 3), repeat=4)
                   if inv_F(B.build_J(*ps)) != j_formula(*ps)[0]]
    bad_det = []
    for ps in itertools.product(range(-5, 6), repeat=4):
        m, det = j_formula(*ps)
        p1, p2, p3, p4 = ps
        expect = (p1 * p4 - p2 * p3) ** 2
        if det != expect or det2(m) != expect or det2(inv_F(B.build_J(*ps))) != expect:
            bad_det.append(ps)
    report(8, not bad_formula and not bad_det,
           f"625 diagram-level matrices ({len(bad_formula)} mismatches), "
           f"14641 diagram-level determinants ({len(bad_det)} mismatches)")


_SCAN_CACHE: list = []


def _scan():
    if not _SCAN_CACHE:
        for seed in range(SCAN_SAMPLES):
            s, kind = gen_scan_spherical(GenConfig(seed=seed, max_crossings=12))
            _SCAN_CACHE.append((seed, kind, s, inv_F(s)))
    return _SCAN_CACHE


def test_09_determinant_obstruction():
    scan = _scan()
    kinds = {k: 0 for k in SCAN_KINDS}
    bad_residue, bad_square, bad_even = [], [], []
    for seed, kind, s, m in scan:
        kinds[kind] += 1
        if det_residue(m) not in (0, 1):
            bad_residue.append(seed)
        if kind == "i-reducible" and not is_square(det2(m)):
            bad_square.append(seed)
        if kind == "closed" and any(x % 2 for x in m.flat()):
            bad_even.append(seed)
    # dedicated families
    for seed in range(500):
        m = inv_F(gen_i_reducible(GenConfig(seed=seed, max_crossings=12)))
        if not is_square(det2(m)):
            bad_square.append(("i", seed))
        s, ps = gen_j_reducible(GenConfig(seed=seed, max_crossings=12))
        dj = j_formula(*ps)[1]
        d = det2(inv_F(s))
        ok = d == 0 if dj == 0 else d % dj == 0 and is_square(d // dj)
        if not ok:
            bad_square.append(("j", seed))
        s = gen_closed_spherical(GenConfig(seed=seed, max_crossings=12))
        if not components(s) or any(x % 2 for x in inv_F(s).flat()):
            bad_even.append(("closed", seed))
    ok = not bad_residue and not bad_square and not bad_even and len(scan) >= SCAN_SAMPLES
    report(9, ok, f"{len(scan)} scanned {kinds}; residue violations {len(bad_residue)}, "
                  f"non-square reducible {len(bad_square)}, odd closed-component entries {len(bad_even)}")


def test_10_delta_congruence():
    tri = B.connect_v(B.htwist(2), B.vtwist(1))
    bad, pairs, seed = [], 0, 0
    while pairs < DELTA_SAMPLES:
        cfg = GenConfig(seed=seed, max_crossings=8)
        seed += 1
        s = gen_spherical(cfg)
        if not delta_sites(s):
            s = B.inner_sum(tri, s, "h", 1) if seed % 2 else B.outer_sum(tri, s, "v", 2)
        sites = delta_sites(s)
        if not sites:
            continue
        rng = random.Random(seed)
        s2 = delta_move(s, rng.choice(sites))
        s2 = decorate(s2, GenConfig(seed=seed, max_crossings=s2.crossings + 6), budget=2,
                      include_delta=rng.random() < 0.5)
        pairs += 1
        if not delta_congruence_check(s, s2):
            bad.append(seed)
    report(10, not bad, f"{pairs} Delta-decorated pairs, {len(bad)} failures")


def test_11_non_realizability_witness():
    target = mat(1, 0, 0, -1)
    residue = det_residue(target)
    hits = [seed for seed, _, _, m in _scan() if m == target]
    report(11, residue == 3 and not hits,
           f"det_residue = {residue}; target seen {len(hits)} times in {len(_scan())} scanned tangles")


def test_12_parity_law():
    corpus = link_corpus(6)
    pairs, bad = 0, 0
    for l in corpus:
        c = l.crossings
        if c == 0:
            continue
        d = np.array([loop_count(l, State.from_int(s, c)) for s in range(1 << c)])
        states = np.arange(1 << c)
        diff = states[:, None] ^ states[None, :]
        hamming = np.vectorize(lambda x: bin(x).count("1"))(diff)
        same_parity = (d[:, None] - d[None, :]) % 2 == 0
        expect = hamming % 2 == 0
        bad += int(np.sum(same_parity != expect))
        pairs += (1 << c) ** 2
    report(12, bad == 0 and pairs > 0, f"{len(corpus)} diagrams, {pairs} state pairs, {bad} violations")
