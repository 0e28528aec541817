"""Tests for the exact arithmetic on PhiScalar, Cyc8 and projective matrices."""

from __future__ import annotations

import itertools
import random

import pytest

from tanglekit.errors import NonCoherentPhases, ResultNotInPhi, ShapeError
from tanglekit.phi import (
    Cyc8,
    MultiIndex,
    PhiScalar,
    ProjMatrix,
    cyc_to_phi,
    det2,
    gcd_list,
    phi_add,
    phi_mul,
    proj_matmul,
    t_sequence,
    xi,
    xi_proj,
)


def test_mul_examples():
    assert phi_mul(PhiScalar(3, 1), PhiScalar(2, 3)) == PhiScalar(-6, 0)
    assert phi_mul(PhiScalar(0, 0), PhiScalar(7, 3)) == PhiScalar(0, 0)
    assert phi_mul(PhiScalar(1, 2), PhiScalar(1, 2)) == PhiScalar(-1, 0)


def test_add_examples():
    assert phi_add(PhiScalar(2, 0), PhiScalar(-3, 0)) == PhiScalar(-1, 0)
    assert phi_add(PhiScalar(5, 2), PhiScalar(0, 0)) == PhiScalar(5, 2)
    with pytest.raises(NonCoherentPhases):
        phi_add(PhiScalar(1, 0), PhiScalar(1, 1))


def test_normal_form():
    # A^4 = -1 folds exponents into 0..3 with a sign
    assert PhiScalar(1, 4) == PhiScalar(-1, 0)
    assert PhiScalar(1, -1) == PhiScalar(-1, 3)
    assert PhiScalar(0, 3) == PhiScalar(0, 0)


def test_mul_matches_complex():
    rng = random.Random(0)
    for _ in range(200):
        x = PhiScalar(rng.randint(-9, 9), rng.randint(-20, 20))
        y = PhiScalar(rng.randint(-9, 9), rng.randint(-20, 20))
        assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9


def test_cyc_ring():
    a = Cyc8.unit(1)
    assert a * a * a * a == Cyc8((-1, 0, 0, 0))
    loop = -(a * a) - Cyc8.unit(-2)
    assert loop.is_zero()
    assert Cyc8((0, 3, 0, 0)).to_phi() == PhiScalar(3, 1)
    with pytest.raises(ResultNotInPhi):
        cyc_to_phi((1, 1, 0, 0))


def test_proj_canonical_sign():
    assert ProjMatrix(((-1, 0), (0, -1))) == ProjMatrix(((1, 0), (0, 1)))
    assert ProjMatrix(((0, -2), (3, 0))).entries == ((0, 2), (-3, 0))


def test_matmul_examples():
    b = ProjMatrix(((1, 0), (1, 1)))
    assert proj_matmul(b, b) == ProjMatrix(((1, 0), (2, 1)))
    m = ProjMatrix(((2, -3, 5), (1, 0, 4)))
    assert proj_matmul(ProjMatrix(((-1, 0), (0, -1))), m) == m
    assert proj_matmul(b, ProjMatrix.column((1, 0))) == ProjMatrix.column((1, 1))
    with pytest.raises(ShapeError):
        proj_matmul(ProjMatrix.column((1, 0)), b)


def test_det_and_gcd():
    assert det2(ProjMatrix(((1, 0), (0, 1)))) == 1
    assert det2(ProjMatrix(((1, 0), (0, -1)))) == -1
    assert det2(ProjMatrix(((4, -4), (4, -4)))) == 0
    assert gcd_list([6, 4]) == 2
    assert gcd_list([0, 5]) == 5
    assert gcd_list([0, 0]) == 0


def test_xi_examples():
    assert xi([(1, 2), (3, 4)]) == (3, 4, 6, 8)
    assert xi([(5, 7)]) == (5, 7)
    v = xi_proj([ProjMatrix.column((-1, 0)), ProjMatrix.column((0, 1))])
    assert v == ProjMatrix.column((0, 1, 0, 0))


def test_xi_sign_invariance():
    rng = random.Random(1)
    for _ in range(50):
        vs = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(3)]
        flipped = [tuple(-x for x in v) if rng.random() < 0.5 else v for v in vs]
        a = xi_proj([ProjMatrix.column(v) for v in vs])
        b = xi_proj([ProjMatrix.column(v) for v in flipped])
        assert a == b


def test_multiindex_and_t_sequence():
    for n in range(6):
        idx = MultiIndex.all(n)
        assert [m.rank for m in idx] == list(range(1, 2**n + 1))
        assert tuple(m.weight for m in idx) == t_sequence(n)
        assert [m.bits for m in idx] == list(itertools.product((1, 2), repeat=n))
        for m in idx:
            assert MultiIndex.from_bits(m.bits) == m
    with pytest.raises(ValueError):
        MultiIndex(2, 5)
