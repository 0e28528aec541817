"""
Spherical tangles and their determinants.

A spherical tangle (one ball removed from another) carries a 2x2 projective
matrix F. This demo composes two spherical tangles and checks that F is
multiplicative, then samples generated spherical tangles and tallies det F
modulo 4. The residues stay in {0, 1}, which is what a square must satisfy.

Run: python3 demos/03_spherical_determinants.py
"""

from __future__ import annotations

from collections import Counter

from tanglekit.diagram import build as B
from tanglekit.invariants import det_residue, inv_F, is_square, j_formula
from tanglekit.phi import det2, proj_matmul
from tanglekit.testkit import GenConfig, gen_scan_spherical


def main() -> None:
    b = B.connect_v(B.htwist(1), B.identity_spherical())
    bb = B.compose_spherical(b, b)
    print("F(b)      =", inv_F(b))
    print("F(b o b)  =", inv_F(bb))
    print("F(b)F(b)  =", proj_matmul(inv_F(b), inv_F(b)))

    print("\nThe J family with twist fills p1..p4:")
    for ps in [(1, 0, 0, 1), (2, 1, 1, 1), (3, -2, 1, 4)]:
        m = inv_F(B.build_J(*ps))
        expected, det = j_formula(*ps)
        print(f"  J{ps}: F = {m}  det = {det2(m)}  closed form matches: {m == expected}")

    print("\nDeterminant residues over 300 generated spherical tangles:")
    residues, kinds, squares = Counter(), Counter(), 0
    for seed in range(300):
        s, kind = gen_scan_spherical(GenConfig(seed=seed, max_crossings=10))
        m = inv_F(s)
        residues[det_residue(m)] += 1
        kinds[kind] += 1
        squares += is_square(det2(m))
    print("  kinds:   ", dict(kinds))
    print("  residues:", dict(sorted(residues.items())))
    print(f"  perfect squares: {squares}/300")


if __name__ == "__main__":
    main()
