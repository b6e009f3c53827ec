"""Command line front end.

Verbs: canon, complexity, eq, axioms, realize, geom, emit.  Exit codes:
0 success, 1 property failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import ParseError, ReducibilityError, StructuralError
from .expr import parse_expr, print_expr
from .geom import selftest_text
from .harness import run_axioms
from .perm import SignedCycleType
from .realize import ActionParams, check_representation, enumerate_admissible, feasible_k
from .tree import canonicalize, complexity, load_catalogue, tree_to_dot, tree_to_json


def _catalogue(args):
    path = args.catalogue or os.environ.get("SPLICE_CATALOGUE")
    return load_catalogue(path)


def _cmd_canon(args) -> int:
    cat = _catalogue(args)
    tree = canonicalize(parse_expr(args.expr, cat), cat)
    if args.json:
        print(tree_to_json(tree))
    else:
        print(print_expr(tree))
    return 0


def _cmd_complexity(args) -> int:
    cat = _catalogue(args)
    tree = canonicalize(parse_expr(args.expr, cat), cat)
    value = complexity(tree, cat)
    if args.json:
        print(f'{{"complexity": {value}}}')
    else:
        print(value)
    return 0


def _cmd_eq(args) -> int:
    cat = _catalogue(args)
    left = canonicalize(parse_expr(args.left, cat), cat)
    right = canonicalize(parse_expr(args.right, cat), cat)
    equal = left == right
    if args.json:
        print(f'{{"equal": {"true" if equal else "false"}}}')
    else:
        print("true" if equal else "false")
    return 0


def _cmd_axioms(args) -> int:
    if args.trials < 1:
        print("axioms: --trials must be at least 1", file=sys.stderr)
        return 2
    report = run_axioms(args.operad, args.trials, args.seed, corrupt=args.corrupt)
    print(report.text(), end="")
    return 0 if report.ok else 1


def _cmd_realize(args) -> int:
    params = ActionParams(args.n, args.p, args.q, swap_roles=(args.convention == "swap"))
    if args.enumerate:
        if args.k is None:
            print("realize: --enumerate requires --k", file=sys.stderr)
            return 2
        found = enumerate_admissible(params, args.k, require_fixed=args.fixed)
        for t in found:
            print(str(t))
        if not found:
            print("(none)")
        return 0
    if args.cycles is None:
        if args.k is not None:
            ok = feasible_k(params, args.k, fixed_component=args.fixed)
            print("feasible" if ok else "infeasible")
            return 0
        print("realize: provide --cycles, or --enumerate/--k", file=sys.stderr)
        return 2
    t = SignedCycleType.parse(args.cycles)
    verdict = check_representation(params, t, require_fixed=args.fixed)
    print(verdict.text())
    return 0


def _cmd_geom(args) -> int:
    text, ok = selftest_text(seed=args.seed, samples=args.samples)
    print(text, end="")
    return 0 if ok else 1


def _cmd_emit(args) -> int:
    cat = _catalogue(args)
    tree = canonicalize(parse_expr(args.expr, cat), cat)
    if args.dot:
        print(tree_to_dot(tree))
    else:
        print(tree_to_json(tree))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spliceops",
        description="Operad calculus for cubes and splicing: canonical splice "
        "trees, complexity, axiom suites, realization checks, geometry kernels.",
    )
    parser.add_argument("--catalogue", help="path to a generator catalogue JSON file")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("canon", help="canonical form of a knot expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("complexity", help="complexity of a knot expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("eq", help="are two expressions the same knot")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("axioms", help="run a seeded operad axiom suite")
    p.add_argument("--operad", choices=("cubes", "overlap", "splice"), required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", action="store_true", help="negative control: inject a fault")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("realize", help="signed-cycle-type realization checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cycles", help='signed cycle type, e.g. "(5)- (1)+"')
    p.add_argument("--fixed", action="store_true", help="require the fixed-component rule")
    p.add_argument("--convention", choices=("as-given", "swap"), default="as-given")
    p.add_argument("--enumerate", action="store_true", help="list admissible types for --k")
    p.add_argument("--k", type=int, help="number of companion circles")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("geom", help="numeric kernel self test")
    p.add_argument("action", choices=("selftest",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=_cmd_geom)

    p = sub.add_parser("emit", help="emit a canonical tree as DOT or JSON")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_emit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, StructuralError, ReducibilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
