"""
Synthesis walkthrough.

Every projective pair [b;a] is the invariant f of some ball tangle. This demo
asks for a few targets, prints the tangle expression the Euclidean
construction returns, and re-computes f on the built diagram to confirm it.

Run: python3 demos/02_synthesis.py
"""

from __future__ import annotations

from tanglekit.expr import to_source
from tanglekit.invariants import inv_f
from tanglekit.synth import euclid, synth_ball

TARGETS = [(1, 0), (0, 1), (7, 3), (-5, 8), (0, 0), (6, 4), (12, -9)]


def main() -> None:
    print("Euclid trace for a=3, b=7:", euclid(3, 7))
    print()
    for b, a in TARGETS:
        d, expr = synth_ball((b, a))
        got = inv_f(d).vec
        print(f"target [{b};{a}]  ->  {to_source(expr)}")
        print(f"    {d.crossings} crossings, f = {got}")
    print("\nNon-coprime targets reuse a coprime core and append closed components.")


if __name__ == "__main__":
    main()
