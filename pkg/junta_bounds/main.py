"""
junta_bounds/main.py
───────
Command-line front end:

- analyze    every measure of one truth table
- verify     run the inequality suites and dump counterexamples
- search     per-degree extremal table at a fixed arity (CSV)
- construct  build xi / selector-chain / compose / and-split / self-compose
- bounds     the C* threshold report and the per-d bounds table

Run as `python -m junta_bounds.main <command> ...`. Results go to stdout,
logs to stderr. Exit status: 0 ok, 1 a verification failed, 2 bad input.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from junta_bounds.cache_service import ResultCache, atomic_write
from junta_bounds.config import get_settings
from junta_bounds.tools.search_tools import cmd_bounds, cmd_search
from junta_bounds.tools.suites import SUITES
from junta_bounds.tools.table_tools import CONSTRUCTIONS, cmd_analyze, cmd_construct
from junta_bounds.tools.verify_tools import cmd_verify

logger = logging.getLogger("junta_bounds")

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


# ─────────────────────────────────────────────────────────
# 1. Argument parsing
# ─────────────────────────────────────────────────────────
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="junta_bounds", description="Exact junta-size bounds for low-degree Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report deg, R, W, maxonomials and h for one table")
    analyze.add_argument("table", help="bf:v1 literal or a file containing one")
    analyze.add_argument("--bs", action="store_true", help="also compute exact block sensitivity")

    verify = sub.add_parser("verify", help="run an inequality suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    verify.add_argument("--scope", type=int, default=None, help="arity bound (level bound for xi/selector suites)")
    verify.add_argument("--samples", type=int, default=200, help="random tables per arity above the exhaustive range")
    verify.add_argument("--seed", type=int, default=0)

    search = sub.add_parser("search", help="extremal R, W, h per degree at arity n")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--degree", type=int, default=None)
    search.add_argument("--jobs", type=int, default=1)
    search.add_argument("--brute-force", action="store_true", help="measure every table instead of one per NPN class")
    search.add_argument("--no-cache", action="store_true")
    search.add_argument("--out", default=None)

    construct = sub.add_parser("construct", help="build a named construction")
    construct.add_argument("kind", choices=CONSTRUCTIONS)
    construct.add_argument("--d", type=int, default=None)
    construct.add_argument("--f", default=None, help="bf:v1 literal or file")
    construct.add_argument("--g", default=None, help="bf:v1 literal or file")
    construct.add_argument("--i", type=int, default=None)
    construct.add_argument("--k", type=int, default=None)
    construct.add_argument("--out", default=None)

    bounds = sub.add_parser("bounds", help="C* upper-bound minimization and the per-d table")
    bounds.add_argument("--table", action="store_true", help="emit the per-d CSV")
    bounds.add_argument("--dmax", type=int, default=20)
    bounds.add_argument("--digits", type=int, default=None)
    bounds.add_argument("--out", default=None)
    return parser


# ─────────────────────────────────────────────────────────
# 2. Dispatch
# ─────────────────────────────────────────────────────────
def dispatch(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command == "analyze":
        return cmd_analyze(args.table, with_bs=args.bs)
    if args.command == "verify":
        return cmd_verify(args.suite, args.scope, samples=args.samples, seed=args.seed)
    if args.command == "search":
        cache = _NoCache() if args.no_cache else None
        return cmd_search(args.n, args.degree, jobs=args.jobs, out=args.out, brute_force=args.brute_force, cache=cache)
    if args.command == "construct":
        result = cmd_construct(args.kind, d=args.d, f=args.f, g=args.g, i=args.i, k=args.k)
        if result["status"] == "success" and args.out:
            atomic_write(args.out, result["text"] + "\n")
        return result
    return cmd_bounds(args.dmax, table=args.table, out=args.out, digits=args.digits)


class _NoCache(ResultCache):
    def get(self, key: str) -> Optional[str]:
        return None

    def put(self, key: str, text: str) -> None:
        return None


def render(args: argparse.Namespace, result: Dict[str, Any]) -> str:
    """What goes to stdout for a successful command."""
    if args.command == "bounds" and result["csv"] is not None and not args.out:
        return result["csv"]
    if args.command in ("search", "construct") and args.out:
        return ""
    return result["text"] + ("" if result["text"].endswith("\n") else "\n")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValueError as e:
        print(f"error: invalid BF_* environment: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(
        level=settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )

    logger.debug("[main] %s %s", args.command, vars(args))
    result = dispatch(args)
    if result["status"] != "success":
        print(f"error: {result['message']}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render(args, result))
    if args.command == "verify" and not result["passed"]:
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
