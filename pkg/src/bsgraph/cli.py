"""Command-line front end.

Exit codes: 0 success / laws hold; 1 mathematical finding (incomplete
collection, uncovered boundary, law violation); 2 usage or input error.
Output is deterministic; every subcommand has a --json form.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dot
from .category import (
    LambdaContext,
    compose,
    factorize,
    verify_category,
    verify_factorization,
    verify_functor,
)
from .errors import (
    BsGraphError,
    Conflict,
    DegreeMismatch,
    FixtureSyntaxError,
    NotAPrefix,
    NotComposable,
    NotCovered,
    ResourceLimit,
    WordSyntaxError,
)
from .fixtures import load_fixture
from .graphs import parse_path, path_degree
from .models import model
from .morphisms import (
    check_traverses,
    enumerate_morphisms,
    lift_path,
    longest_traversal,
    shortest_traversal,
)
from .squares import CompleteCollection, check_complete
from .words import BS, GRID, is_prefix, left_quotient, longest_form, mul, parse_word, shortest_form

_FINDING = (NotCovered, Conflict, NotAPrefix, NotComposable, DegreeMismatch)
_INPUT_ERROR = (FixtureSyntaxError, WordSyntaxError)


def _emit(payload, as_json: bool, text: str):
    print(json.dumps(payload, indent=2) if as_json else text)


def _context(path) -> tuple:
    fx = load_fixture(path)
    return fx, LambdaContext(fx.graph, CompleteCollection(fx.ops, tuple(fx.squares)))


def _degree(ops, text: str):
    return ops.parse(text)


def cmd_check(args) -> int:
    fx = load_fixture(args.fixture)
    report = check_complete(fx.graph, fx.ops, fx.squares)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    elif report.complete:
        print(
            f"complete: {report.square_count} squares, "
            f"{report.red_path_count} red-first paths, "
            f"{report.blue_path_count} blue-first paths"
        )
    else:
        print("incomplete")
        for p in report.uncovered_red:
            print(f"  uncovered red-first path: {' '.join(p)}")
        for p in report.uncovered_blue:
            print(f"  uncovered blue-first path: {' '.join(p)}")
        for p in report.duplicated:
            print(f"  duplicated boundary path: {' '.join(p)}")
        for m in report.malformed:
            print(f"  malformed square: {m}")
    return 0 if report.complete else 1


def cmd_word(args) -> int:
    if args.word_op == "normalize":
        w = parse_word(args.w1)
        _emit(
            {"shortest": shortest_form(w), "longest": longest_form(w), "pair": list(w.pair)},
            args.json,
            f"shortest {shortest_form(w)}\nlongest {longest_form(w)}\npair {w.pair}",
        )
        return 0
    w1, w2 = parse_word(args.w1), parse_word(args.w2)
    if args.word_op == "mul":
        w = mul(w1, w2)
        _emit({"word": shortest_form(w), "pair": list(w.pair)}, args.json, shortest_form(w))
        return 0
    if args.word_op == "prefix":
        ok = is_prefix(w1, w2)
        _emit({"prefix": ok}, args.json, "true" if ok else "false")
        return 0
    # quotient
    w = left_quotient(w1, w2)
    _emit({"word": shortest_form(w), "pair": list(w.pair)}, args.json, shortest_form(w))
    return 0


def cmd_model(args) -> int:
    ops = GRID if args.mode == "grid" else BS
    m = model(ops, _degree(ops, args.word))
    if args.dot:
        sys.stdout.write(dot.model_to_dot(m))
        return 0
    payload = {
        "degree": ops.format(m.word),
        "vertices": [ops.format(z) for z in m.vertices],
        "edges": [
            {"prefix": ops.format(z), "letter": l.value} for z, l in m.edges
        ],
    }
    _emit(
        payload,
        args.json,
        f"degree {ops.format(m.word)}: {len(m.vertices)} vertices, {len(m.edges)} edges",
    )
    return 0


def cmd_lift(args) -> int:
    fx, ctx = _context(args.fixture)
    path = parse_path(ctx.graph, args.path)
    lam = lift_path(ctx.graph, ctx.collection, path)
    if args.oracle:
        matches = [
            m
            for m in enumerate_morphisms(ctx.graph, ctx.collection, lam.degree)
            if check_traverses(ctx.graph, m, path)
        ]
        if matches != [lam]:
            print(
                f"oracle mismatch: enumeration found {len(matches)} morphisms "
                f"traversed by the path",
                file=sys.stderr,
            )
            return 1
    if args.dot:
        sys.stdout.write(dot.morphism_to_dot(lam))
    else:
        _emit(
            lam.to_json(),
            args.json,
            f"degree {ctx.ops.format(lam.degree)}: "
            f"{len(lam.vmap)} vertices, {len(lam.emap)} edges, "
            f"r={lam.range_} s={lam.source}",
        )
    return 0


def cmd_compose(args) -> int:
    fx, ctx = _context(args.fixture)
    mu = lift_path(ctx.graph, ctx.collection, parse_path(ctx.graph, args.lhs))
    nu = lift_path(ctx.graph, ctx.collection, parse_path(ctx.graph, args.rhs))
    lam = compose(ctx, mu, nu)
    _emit(
        lam.to_json(),
        args.json,
        f"degree {ctx.ops.format(lam.degree)}: traversal "
        f"{shortest_traversal(ctx.graph, lam)}",
    )
    return 0


def cmd_factorize(args) -> int:
    fx, ctx = _context(args.fixture)
    lam = lift_path(ctx.graph, ctx.collection, parse_path(ctx.graph, args.path))
    w1 = _degree(ctx.ops, args.at)
    w2 = ctx.ops.quotient(w1, lam.degree)
    mu, nu = factorize(lam, w1, w2)
    _emit(
        {"left": mu.to_json(), "right": nu.to_json()},
        args.json,
        f"left  degree {ctx.ops.format(mu.degree)}: "
        f"{shortest_traversal(ctx.graph, mu)}\n"
        f"right degree {ctx.ops.format(nu.degree)}: "
        f"{shortest_traversal(ctx.graph, nu)}",
    )
    return 0


def cmd_traversals(args) -> int:
    fx, ctx = _context(args.fixture)
    path = parse_path(ctx.graph, args.path)
    lam = lift_path(ctx.graph, ctx.collection, path)
    rows = []
    if not args.longest:
        rows.append(("shortest", shortest_traversal(ctx.graph, lam)))
    if not args.shortest:
        rows.append(("longest", longest_traversal(ctx.graph, lam)))
    _emit(
        {kind: str(p) for kind, p in rows},
        args.json,
        "\n".join(f"{kind} {p}" for kind, p in rows),
    )
    return 0


def cmd_enumerate(args) -> int:
    fx, ctx = _context(args.fixture)
    w = _degree(ctx.ops, args.degree)
    found = enumerate_morphisms(ctx.graph, ctx.collection, w)
    if args.limit is not None:
        found = found[: args.limit]
    _emit(
        {"count": len(found), "morphisms": [m.to_json() for m in found]},
        args.json,
        "\n".join(
            f"[{i}] r={m.range_} s={m.source} "
            f"traversal {shortest_traversal(ctx.graph, m)}"
            for i, m in enumerate(found)
        )
        or "none",
    )
    return 0


def cmd_verify(args) -> int:
    fx, ctx = _context(args.fixture)
    wanted = args.laws.split(",")
    suites = {
        "category": verify_category,
        "functor": verify_functor,
        "factorization": verify_factorization,
    }
    unknown = [w for w in wanted if w not in suites]
    if unknown:
        print(f"unknown law suite(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    laws = []
    for name in wanted:
        laws.extend(suites[name](ctx, args.max_len).laws)
    passed = all(l.passed for l in laws)
    if args.json:
        print(json.dumps({"passed": passed, "laws": [l.to_json() for l in laws]}, indent=2))
    else:
        for l in laws:
            status = "pass" if l.passed else "FAIL"
            print(f"{status}  {l.name}  ({l.instances} instances)")
            if l.counterexample:
                print(f"      counterexample: {l.counterexample}")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsgraph",
        description="Higher-rank graphs over the positive Baumslag-Solitar "
        "monoid from 2-coloured graphs with complete square collections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="validate square-collection completeness")
    p.add_argument("fixture")
    add_json(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("word", help="degree-monoid arithmetic")
    p.add_argument("word_op", choices=["normalize", "mul", "quotient", "prefix"])
    p.add_argument("w1")
    p.add_argument("w2", nargs="?")
    add_json(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("model", help="build the template graph of a degree")
    p.add_argument("--word", required=True)
    p.add_argument("--mode", choices=["bs", "grid"], default="bs")
    p.add_argument("--dot", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("lift", help="lift a path to its unique morphism")
    p.add_argument("fixture")
    p.add_argument("--path", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against enumeration")
    p.add_argument("--dot", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("compose", help="compose the lifts of two paths")
    p.add_argument("fixture")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    add_json(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("factorize", help="split a lifted morphism at a degree")
    p.add_argument("fixture")
    p.add_argument("--path", required=True)
    p.add_argument("--at", required=True, metavar="W1")
    add_json(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("traversals", help="shortest/longest traversal of a lift")
    p.add_argument("fixture")
    p.add_argument("--path", required=True)
    p.add_argument("--shortest", action="store_true")
    p.add_argument("--longest", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_traversals)

    p = sub.add_parser("enumerate", help="brute-force all morphisms of a degree")
    p.add_argument("fixture")
    p.add_argument("--degree", required=True)
    p.add_argument("--limit", type=int)
    add_json(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the law-verification suites")
    p.add_argument("fixture")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--laws", default="category,functor,factorization")
    add_json(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except _INPUT_ERROR as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _FINDING as exc:
        print(f"{type(exc).__name__}: {exc}")
        return 1
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BsGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
