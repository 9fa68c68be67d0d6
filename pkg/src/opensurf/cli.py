"""``tap`` command line interface."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automaton import DEFAULT_MAX_STAGE, AutomatonError, develop, parse, serialize
from .canonical import canonical_code
from .dot import to_dot
from .oracle import NotLoopOnly, cb_invariant, confluence_report, gen_appendix
from .pipeline import SCHEMA, Verdict, invariants_of_tree, run
from .surface_blocks import SurfaceError
from .treeify import DEFAULT_MAX_UNFOLD, SizeCapExceeded

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _load(path):
    return parse(Path(path).read_text(encoding="utf-8"))


def _print_invariants(inv, label=None):
    prefix = f"{label}: " if label else ""
    d = inv.as_dict()
    print(f"{prefix}{d['orientability']}, genus/crosscaps {d['genus_or_crosscaps']}, "
          f"planar={d['planar']}, compact={d['compact']}, code {d['reduced_code']}")


def cmd_check(args):
    left = invariants_of_tree(run(_load(args.a), max_unfold=args.max_unfold).reduced)
    right = invariants_of_tree(run(_load(args.b), max_unfold=args.max_unfold).reduced)
    verdict = Verdict(left.reduced_code == right.reduced_code, left, right)
    if args.json:
        print(json.dumps(verdict.as_dict(), indent=2))
    else:
        print("homeomorphic" if verdict.homeomorphic else "not homeomorphic")
        _print_invariants(left, args.a)
        _print_invariants(right, args.b)
    return EXIT_YES if verdict.homeomorphic else EXIT_NO


def cmd_invariants(args):
    inv = invariants_of_tree(run(_load(args.a), max_unfold=args.max_unfold).reduced)
    if args.json:
        print(json.dumps({"schema": SCHEMA, **inv.as_dict()}, indent=2))
    else:
        _print_invariants(inv)
    return EXIT_YES


def cmd_reduce(args):
    stages = run(_load(args.a), max_unfold=args.max_unfold, trace=args.trace)
    out = Path(args.dot)
    out.mkdir(parents=True, exist_ok=True)
    (out / "graph.dot").write_text(to_dot(stages.graph, "decorated"))
    (out / "propagated.dot").write_text(to_dot(stages.propagated, "propagated"))
    (out / "unfolded.dot").write_text(to_dot(stages.unfolded, "unfolded"))
    (out / "admissible.dot").write_text(to_dot(stages.admissible, "admissible"))
    (out / "reduced.dot").write_text(to_dot(stages.reduced, "reduced"))
    if args.trace:
        for i, (move, tree) in enumerate(stages.moves, start=1):
            (out / f"move_{i:04d}.dot").write_text(to_dot(tree, f"move_{i}"))
    print(canonical_code(stages.reduced))
    return EXIT_YES


def cmd_develop(args):
    dev = develop(_load(args.a), args.s, max_stage=args.max_stage)
    d = {
        "schema": SCHEMA,
        "stage": dev.stage,
        "copy_counts": {str(k): n for k, n in dev.copy_counts.items()},
        "euler_characteristic": dev.euler_characteristic,
        "boundary_count": dev.boundary_count,
        "orientable": dev.orientable,
        "genus_or_crosscaps": dev.genus_or_crosscaps,
    }
    if args.json:
        print(json.dumps(d, indent=2))
    else:
        for k, v in d.items():
            if k != "schema":
                print(f"{k}: {v}")
    return EXIT_YES


def cmd_gen_appendix(args):
    bits = args.bits.strip()
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError("--bits must be a nonempty string of 0 and 1")
    text = serialize(gen_appendix([int(c) for c in bits]))
    if args.o == "-":
        sys.stdout.write(text)
    else:
        Path(args.o).write_text(text, encoding="utf-8")
    return EXIT_YES


def cmd_oracle_cb(args):
    stages = run(_load(args.a), max_unfold=args.max_unfold)
    inv = cb_invariant(stages.admissible)
    print(f"rank={inv.rank} multiplicity={inv.multiplicity} ({inv})")
    return EXIT_YES


def cmd_oracle_confluence(args):
    stages = run(_load(args.a), max_unfold=args.max_unfold)
    report = confluence_report(stages.admissible, args.trials, args.seed)
    status = "confluent" if report.confluent else "NOT confluent"
    print(f"{status}: {report.trials} trials, seed {report.seed}, expected {report.expected}")
    for code in report.terminals:
        if code != report.expected:
            print(f"  divergent terminal {code}")
    return EXIT_YES if report.confluent else EXIT_NO


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-unfold", type=int, default=argparse.SUPPRESS,
                        help=f"vertex cap for the unfolded tree (default {DEFAULT_MAX_UNFOLD})")

    parser = argparse.ArgumentParser(prog="tap", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide whether two automata give homeomorphic surfaces")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", parents=[common], help="print classification invariants")
    p.add_argument("a")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("reduce", parents=[common], help="write DOT files for every pipeline stage")
    p.add_argument("a")
    p.add_argument("--dot", required=True, metavar="DIR")
    p.add_argument("--trace", action="store_true", help="also write one DOT file per applied move")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("develop", parents=[common], help="invariants of the stage-N compact approximation")
    p.add_argument("a")
    p.add_argument("-s", type=int, required=True, metavar="N")
    p.add_argument("--max-stage", type=int, default=DEFAULT_MAX_STAGE)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_develop)

    p = sub.add_parser("gen", parents=[common], help="generate automata")
    gen = p.add_subparsers(dest="generator", required=True)
    g = gen.add_parser("appendix", parents=[common], help="Cantor set decorated by ranked chains")
    g.add_argument("--bits", required=True)
    g.add_argument("-o", default="-", metavar="OUT")
    g.set_defaults(func=cmd_gen_appendix)

    p = sub.add_parser("oracle", parents=[common], help="independent verification instruments")
    orc = p.add_subparsers(dest="oracle", required=True)
    o = orc.add_parser("cb", parents=[common], help="Cantor-Bendixson invariant (plain o trees only)")
    o.add_argument("a")
    o.set_defaults(func=cmd_oracle_cb)
    o = orc.add_parser("confluence", parents=[common], help="random move orders against the reduction")
    o.add_argument("a")
    o.add_argument("--trials", type=int, default=100)
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_oracle_confluence)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "max_unfold"):
        args.max_unfold = DEFAULT_MAX_UNFOLD
    try:
        return args.func(args)
    except (AutomatonError, SurfaceError, SizeCapExceeded, NotLoopOnly, OSError, ValueError) as exc:
        print(f"tap: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
