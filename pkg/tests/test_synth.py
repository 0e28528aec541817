"""Tests for the Euclidean synthesis of ball tangles."""

from __future__ import annotations

import random

import pytest

from tanglekit.expr import parse_expr, to_source
from tanglekit.invariants import inv_f
from tanglekit.phi import ProjMatrix
from tanglekit.synth import euclid, synth_ball, synth_expr


def test_euclid_examples():
    t = euclid(3, 5)
    assert t.quotients == (1, 1, 2)
    assert t.remainders == (3, 2, 1, 0)
    assert t.gcd == 1
    t = euclid(1, 7)
    assert (t.quotients, t.remainders) == ((7,), (1, 0))
    t = euclid(4, 6)
    assert (t.quotients, t.remainders, t.gcd) == ((1, 2), (4, 2, 0), 2)
    for a, b in [(0, 3), (3, 3), (5, 2), (-1, 4)]:
        with pytest.raises(ValueError):
            euclid(a, b)


def test_worked_examples():
    assert to_source(synth_expr(3, 0)) == "v(3) +h t1"
    assert to_source(synth_expr(1, 0)) == "t1"
    d, e = synth_ball(ProjMatrix.column((5, 3)))
    assert inv_f(d).vec == ProjMatrix.column((5, 3))


def test_small_grid():
    for a in range(-8, 9):
        for b in range(-8, 9):
            d, e = synth_ball((b, a))
            assert inv_f(d).vec == ProjMatrix.column((b, a)), (b, a, to_source(e))


def test_expression_round_trip():
    for p, q in [(5, 3), (13, 8), (7, -2), (0, 4), (-6, 9)]:
        e = synth_expr(p, q)
        assert parse_expr(to_source(e)) == e


def test_large_targets():
    rng = random.Random(5)
    for _ in range(10):
        p, q = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        d, _ = synth_ball((p, q))
        assert inv_f(d).vec == ProjMatrix.column((p, q))
