"""
Embedding obstruction.

If ball tangles t_1..t_k sit disjointly inside a link L, the product of the
gcds of their invariants divides |<L>|. Here we test a few candidates against
the trefoil and the figure-eight knot.

Run: python3 demos/04_embedding_obstruction.py
"""

from __future__ import annotations

from tanglekit.bracket import bracket
from tanglekit.expr import evaluate
from tanglekit.invariants import inv_f, krebes_check
from tanglekit.phi import gcd_list

LINKS = {"trefoil": "num(h(3))", "figure-eight": "num(v(2) +h h(2))"}
TANGLES = {"[2;0]": "v(2) +h t1", "[3;0]": "v(3) +h t1", "[5;0]": "v(5) +h t1", "[3;1]": "h(3)"}


def main() -> None:
    for lname, lsrc in LINKS.items():
        lb = bracket(evaluate(lsrc))
        print(f"{lname}: |<L>| = {lb.magnitude}")
        for tname, tsrc in TANGLES.items():
            inv = inv_f(evaluate(tsrc))
            g = gcd_list(inv.vec.flat())
            ok = krebes_check([inv], lb)
            verdict = "not excluded" if ok else "cannot embed"
            print(f"  tangle f = {tname:6s} gcd {g}: {verdict}")


if __name__ == "__main__":
    main()
