"""Command line interface.

Subcommands: count, generate, rank, unrank, verify, bench.  Exit code 0
on success, 1 when a verification or bound check fails, 2 on bad usage
or invalid input.
"""

from __future__ import annotations

import argparse
import sys

from .core import decode_text, encode_bits, encode_text, path_tree
from .engine import list_stream
from .greedy import greedy_events
from .kernel import jit_enabled, run_listing
from .oracle import (DEFAULT_CAP, check_engines_agree, check_exhaustive,
                     check_pivot_gray, check_reversal)
from .ranking import count, rank, unrank

_CHECK_NAMES = ("gray", "exhaustive", "reverse", "engines", "rank")


def _fan_n(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return value


def _cmd_count(args):
    print(count(args.n))
    return 0


def _events(args):
    reverse = args.direction == "reverse"
    if args.engine == "greedy":
        if reverse:
            raise ValueError("the greedy engine only runs forward; "
                             "use --engine recursive for reverse order")
        start = decode_text(args.n, args.start) if args.start else path_tree(args.n)
        return greedy_events(start)
    if args.start is not None:
        raise ValueError("--start requires --engine greedy")
    return list_stream(args.n, reverse=reverse)


def _cmd_generate(args):
    events = _events(args)
    if args.format == "delta":
        for move, t in events:
            print(encode_text(t) if move is None else move)
    elif args.format == "bits":
        for _, t in events:
            print(encode_bits(t))
    else:
        for _, t in events:
            print(encode_text(t))
    return 0


def _cmd_rank(args):
    print(rank(decode_text(args.n, args.tree)))
    return 0


def _cmd_unrank(args):
    print(encode_text(unrank(args.n, args.rank)))
    return 0


def _run_check(name, n, cap):
    if name == "gray":
        rep = check_pivot_gray(t for _, t in list_stream(n))
        if rep.is_gray:
            return True, f"{rep.length} trees, every step one pivot move"
        return False, f"violation entering tree {rep.first_violation + 1}"
    if name == "exhaustive":
        rep = check_exhaustive(n, (t for _, t in list_stream(n)), cap)
        if rep.is_exhaustive:
            return True, f"all {rep.length} trees listed exactly once"
        if rep.duplicates:
            return False, f"duplicate at index {rep.duplicates[0]}"
        return False, f"{rep.length} trees listed, {count(n)} expected"
    if name == "reverse":
        ok = check_reversal(n, cap)
        return ok, ("reverse listing retraces forward" if ok else "mismatch")
    if name == "engines":
        ok = check_engines_agree(n, cap)
        return ok, ("greedy and recursive listings identical" if ok else "mismatch")
    for i, (_, t) in enumerate(list_stream(n), start=1):
        if rank(t) != i:
            return False, f"rank mismatch at position {i}"
        if unrank(n, i).key() != t.key():
            return False, f"unrank mismatch at rank {i}"
    return True, f"rank and unrank invert each other on all {count(n)} trees"


def _cmd_verify(args):
    if args.checks:
        names = [s.strip() for s in args.checks.split(",") if s.strip()]
        for name in names:
            if name not in _CHECK_NAMES:
                raise ValueError(f"unknown check {name!r} "
                                 f"(choose from {', '.join(_CHECK_NAMES)})")
    else:
        names = list(_CHECK_NAMES)
    if args.n > args.cap:
        raise ValueError(f"n={args.n} exceeds the verification cap "
                         f"({args.cap}); raise --cap to proceed")
    failed = False
    for name in names:
        ok, detail = _run_check(name, args.n, args.cap)
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
        failed = failed or not ok
    return 1 if failed else 0


def _cmd_bench(args):
    runs = [run_listing(args.n, jit=False)] if args.compare else [run_listing(args.n)]
    if args.compare:
        if jit_enabled():
            runs.append(run_listing(args.n, jit=True))
        else:
            print("compiled lane unavailable; showing the pure lane only")
    for r in runs:
        lane = "jit" if r.jitted else "pure"
        rate = r.trees / r.seconds if r.seconds > 0 else float("inf")
        print(f"lane={lane} n={r.n} trees={r.trees} moves={r.moves} "
              f"activations={r.activations} peak_depth={r.max_depth} "
              f"time={r.seconds:.3f}s rate={rate:,.0f} trees/s")
    total = count(args.n)
    r = runs[0]
    checks = (
        ("tree count matches the closed form", r.trees == total),
        ("activations within twice the tree count", r.activations <= 2 * total),
        ("peak depth within n - 1", r.max_depth <= max(args.n - 1, 1)),
    )
    failed = False
    for label, ok in checks:
        print(f"{label}: {'OK' if ok else 'VIOLATED'}")
        failed = failed or not ok
    return 1 if failed else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fantrees",
        description="Spanning trees of the fan graph in pivot Gray code order.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of spanning trees of the fan on n path vertices")
    p.add_argument("n", type=_fan_n)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("generate", help="write the full listing to stdout")
    p.add_argument("n", type=_fan_n)
    p.add_argument("--format", choices=("edges", "bits", "delta"), default="edges",
                   help="edge text, 0/1 incidence strings, or first tree plus moves")
    p.add_argument("--engine", choices=("recursive", "greedy"), default="recursive")
    p.add_argument("--direction", choices=("forward", "reverse"), default="forward")
    p.add_argument("--start", metavar="TREE",
                   help="greedy engine only: start tree as edge text")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("rank", help="1-based position of a tree in the listing")
    p.add_argument("n", type=_fan_n)
    p.add_argument("tree", help="tree as edge text, e.g. '2-3,3-4,2-inf,5-inf'")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", help="tree at a 1-based position in the listing")
    p.add_argument("n", type=_fan_n)
    p.add_argument("rank", type=int)
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("verify", help="run the brute force checks")
    p.add_argument("n", type=_fan_n)
    p.add_argument("--checks", metavar="LIST",
                   help="comma separated subset of: " + ", ".join(_CHECK_NAMES))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="largest n the checks will accept (default %(default)s)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="instrumented full listing run")
    p.add_argument("n", type=_fan_n)
    p.add_argument("--compare", action="store_true",
                   help="run both the pure and compiled lanes")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
