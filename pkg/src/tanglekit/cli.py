"""
Command-line interface.

Every subcommand prints a human-readable report, or a single JSON object
under ``--json``. Exit codes: 0 success, 1 a checked property failed,
2 usage, parse, or shape error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .bracket import bracket, bracket_full, bracket_monocyclic, bracket_skein
from .diagram.core import Diagram
from .errors import TanglekitError
from .expr import evaluate, to_source
from .invariants import (
    delta_congruence_check,
    det_residue,
    inv_f,
    inv_Fn,
    is_square,
    krebes_check,
)
from .jsonio import diagram_from_json
from .phi import ProjMatrix, det2, gcd_list
from .synth import synth_ball
from .testkit import GenConfig, decorate, gen_scan_spherical, gen_spherical, link_corpus

__all__ = ["main", "JSON_SCHEMA_VERSION"]

JSON_SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def load_diagram(arg: str) -> Diagram:
    """Read a diagram from a ``.json`` file path or a DSL expression."""
    if arg.endswith(".json"):
        path = Path(arg)
        if not path.is_file():
            raise _UsageError(f"no such file: {arg}")
        return diagram_from_json(path.read_text())
    return evaluate(arg)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        out = {"version": JSON_SCHEMA_VERSION, "command": args.command}
        out.update(payload)
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_bracket(args) -> int:
    d = load_diagram(args.diagram)
    v = bracket(d, args.method)
    _emit(args, {"mag": v.mag, "exp": v.exp, "abs": v.magnitude},
          f"<L> = {v.mag} * A^{v.exp}\n|<L>| = {v.magnitude}")
    return EXIT_OK


def cmd_invariant(args) -> int:
    d = load_diagram(args.diagram)
    if d.boundaries == 0:
        raise _UsageError("invariant needs a tangle, got a link")
    m = inv_Fn(d, args.method).mat
    _emit(args, {"holes": d.boundaries - 1, "matrix": m.tolist()}, str(m))
    return EXIT_OK


def cmd_synth(args) -> int:
    b, a = args.b, args.a
    d, expr = synth_ball((b, a))
    got = inv_f(d).vec
    ok = got == ProjMatrix.column((b, a))
    src = to_source(expr)
    _emit(args, {"target": [b, a], "expr": src, "crossings": d.crossings,
                 "invariant": [x for x in got.flat()], "verified": ok},
          f"{src}\nf = {got} ({'verified' if ok else 'MISMATCH'}, {d.crossings} crossings)")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_obstruct(args) -> int:
    link = load_diagram(args.link)
    if link.boundaries != 0:
        raise _UsageError("--link must be a link diagram")
    invs = []
    for t in args.tangle:
        d = load_diagram(t)
        if d.boundaries == 0:
            raise _UsageError(f"--tangle {t!r} is a link, not a tangle")
        invs.append(inv_Fn(d).mat)
    lb = bracket(link)
    possible = krebes_check(invs, lb)
    prod = 1
    for m in invs:
        prod *= gcd_list(m.flat())
    verdict = "not excluded" if possible else "obstructed: the tangles cannot embed disjointly"
    _emit(args, {"bracket_abs": lb.magnitude, "gcd_product": prod, "embedding_possible": possible},
          f"|<L>| = {lb.magnitude}, product of gcds = {prod}\n{verdict}")
    return EXIT_OK


def _load_checkpoint(path: Path | None) -> dict[int, dict]:
    done: dict[int, dict] = {}
    if path is None or not path.exists():
        return done
    for line in path.read_text().splitlines():
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            # torn final line from an interrupted run
            continue
        done[int(rec["seed"])] = rec
    return done


def cmd_scan_det(args) -> int:
    ckpt = Path(args.checkpoint) if args.checkpoint else None
    done = _load_checkpoint(ckpt)
    sink = ckpt.open("a") if ckpt else None
    residues = {r: 0 for r in range(4)}
    bad_residue, non_square = [], []
    try:
        for k in range(args.samples):
            seed = args.seed + k
            rec = done.get(seed)
            if rec is None:
                cfg = GenConfig(seed=seed, max_crossings=args.max_crossings, depth=3,
                                allow_closed_components=args.closed)
                s, kind = gen_scan_spherical(cfg, "closed" if args.closed else None)
                m = inv_Fn(s).mat
                det = det2(m)
                rec = {"seed": seed, "kind": kind, "matrix": m.tolist(), "det": det,
                       "residue": det_residue(m), "square": is_square(det)}
                if sink:
                    sink.write(json.dumps(rec) + "\n")
                    sink.flush()
            residues[rec["residue"]] += 1
            if rec["residue"] not in (0, 1):
                bad_residue.append(rec)
            if not rec["square"]:
                non_square.append(rec)
            if args.stream and not args.json:
                print(f"seed={seed} kind={rec['kind']} det={rec['det']} residue={rec['residue']}")
    finally:
        if sink:
            sink.close()
    summary = (f"seeds {args.seed}..{args.seed + args.samples - 1}: residues {residues}\n"
               f"residue violations: {len(bad_residue)}; non-square determinants: {len(non_square)}")
    for r in non_square[:10]:
        summary += f"\n  non-square det {r['det']} at seed {r['seed']} ({r['kind']})"
    _emit(args, {"seed": args.seed, "samples": args.samples, "residues": residues,
                 "violations": bad_residue, "non_square": non_square}, summary)
    return EXIT_VIOLATION if bad_residue else EXIT_OK


def cmd_delta_check(args) -> int:
    failures, applied = [], 0
    for k in range(args.samples):
        seed = args.seed + k
        cfg = GenConfig(seed=seed, max_crossings=args.max_crossings, depth=3)
        s = gen_spherical(cfg)
        s2 = decorate(s, GenConfig(seed=seed, max_crossings=args.max_crossings + 8),
                      budget=3, include_delta=True)
        applied += 1
        if not delta_congruence_check(s, s2):
            failures.append(seed)
    _emit(args, {"seed": args.seed, "samples": applied, "failures": failures},
          f"seeds {args.seed}..{args.seed + args.samples - 1}: "
          f"{applied - len(failures)}/{applied} pairs congruent mod 4")
    return EXIT_VIOLATION if failures else EXIT_OK


def _golden() -> list[tuple[str, bool]]:
    out = []
    f = lambda src: inv_f(evaluate(src)).vec.flat()
    F = lambda src: inv_Fn(evaluate(src)).mat.tolist()
    mag = lambda src: bracket(evaluate(src)).magnitude
    out.append(("unknot", mag("num(t1)") == 1))
    out.append(("2-unlink", mag("num(t2)") == 0))
    out.append(("Hopf", mag("num(h(2))") == 2))
    out.append(("trefoil", mag("num(h(3))") == 3))
    out.append(("figure-eight", mag("num(v(2) +h h(2))") == 5))
    out.append(("f(t1)", f("t1") == (1, 0)))
    out.append(("f(t2)", f("t2") == (0, 1)))
    out.append(("f(t1 +h t1)", f("t1 +h t1") == (0, 0)))
    out.append(("f(h(3))", f("h(3)") == (3, 1)))
    out.append(("f(v(3))", f("v(3)") == (1, 3)))
    out.append(("f(h(1) +h h(1))", f("h(1) +h h(1)") == (2, 1)))
    out.append(("f(v(3) +h t1)", f("v(3) +h t1") == (3, 0)))
    out.append(("F(I)", F("I") == [[1, 0], [0, 1]]))
    bb = "(h(1) +v I) o (h(1) +v I)"
    out.append(("F(b o b)", F(bb) == [[1, 0], [2, 1]]))
    return out


def cmd_selftest(args) -> int:
    checks = _golden()
    agree = True
    for d in link_corpus(6):
        if not (bracket_full(d) == bracket_monocyclic(d) == bracket_skein(d)):
            agree = False
            break
    checks.append(("bracket oracles agree", agree))
    ok = all(c for _, c in checks)
    text = "\n".join(f"{'PASS' if c else 'FAIL'} {name}" for name, c in checks)
    _emit(args, {"checks": {name: c for name, c in checks}, "ok": ok}, text)
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tanglekit", description=__doc__.strip().splitlines()[0])
    p.add_argument("--version", action="version", version=f"tanglekit {__version__}")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON object")

    sp = sub.add_parser("bracket", help="Kauffman bracket of a link")
    sp.add_argument("diagram", help="DSL expression or .json file")
    sp.add_argument("--method", default="auto", choices=["auto", "full", "monocyclic", "skein"])
    common(sp)
    sp.set_defaults(func=cmd_bracket)

    sp = sub.add_parser("invariant", help="projective invariant matrix of a tangle")
    sp.add_argument("diagram", help="DSL expression or .json file")
    sp.add_argument("--method", default="auto", choices=["auto", "full", "monocyclic", "skein"])
    common(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("synth", help="ball tangle with f = [b;a]")
    sp.add_argument("b", type=int)
    sp.add_argument("a", type=int)
    common(sp)
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("obstruct", help="gcd divisibility test for embedding tangles in a link")
    sp.add_argument("--link", required=True)
    sp.add_argument("--tangle", action="append", required=True)
    common(sp)
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("scan-det", help="determinant residues of generated spherical tangles")
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--closed", action="store_true", help="only closed-component tangles")
    sp.add_argument("--max-crossings", type=int, default=12)
    sp.add_argument("--checkpoint", help="JSON-lines file; completed seeds are skipped on rerun")
    sp.add_argument("--stream", action="store_true", help="print one line per sample")
    common(sp)
    sp.set_defaults(func=cmd_scan_det)

    sp = sub.add_parser("delta-check", help="mod-4 congruence over decorated pairs")
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-crossings", type=int, default=10)
    common(sp)
    sp.set_defaults(func=cmd_delta_check)

    sp = sub.add_parser("selftest", help="golden values and oracle agreement")
    common(sp)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TanglekitError, _UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
