#!/usr/bin/env python3
"""
wreathkit command line

Decides word, conjugacy and power problems in wreath products, Baumslag-Solitar groups and
free solvable groups described in a small DSL:

    wreathkit --group "wr(Z/2, Z)" cp "a1 t1" "t1 a1"
    wreathkit --group "freesolvable(2,2)" --batch queries.txt --json
    wreathkit selftest --full
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .config import get_settings, override_settings
from .dsl import parse_group
from .errors import (
    CapExceededError,
    ConfigurationError,
    DslError,
    SmoothnessError,
    UnknownGeneratorError,
    UnsupportedError,
    UsageError,
    WordSyntaxError,
)
from .query import COMMANDS, QueryResult, run_batch, run_query
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

USAGE_ERRORS = (
    DslError,
    WordSyntaxError,
    UnknownGeneratorError,
    SmoothnessError,
    ConfigurationError,
    UsageError,
    CapExceededError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathkit", description="Decision procedures for wreath products and free solvable groups"
    )
    parser.add_argument("command", choices=COMMANDS + ("selftest",), nargs="?", help="Query to run")
    parser.add_argument("words", nargs="*", help="Words, e.g. \"a1 t1^-2 a1\"; use 1 for the identity")
    parser.add_argument("--group", help="Group description, e.g. \"wr(Z/2, Z)\"")
    parser.add_argument("--batch", type=Path, help="File with one query per line: command word1 ; word2")
    parser.add_argument("--workers", type=int, default=1, help="Threads for batch mode (default: 1)")
    parser.add_argument("--json", action="store_true", help="Print one JSON object per query")
    parser.add_argument("--beta", type=int, help="Smoothness bound for torsion orders (default: 64)")
    parser.add_argument("--radius", type=int, help="Search radius for conjugacy witnesses (default: 8)")
    parser.add_argument("--exit-verdict", action="store_true", help="Exit with 1 when a yes/no query answers no")
    parser.add_argument("--full", action="store_true", help="Run the selftest at full size")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    return parser


def _print_results(results: List[QueryResult], as_json: bool) -> None:
    for result in results:
        print(result.to_json() if as_json else result.to_text())


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = override_settings(get_settings(), beta=args.beta, radius=args.radius)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = logging.DEBUG if args.verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    if args.command == "selftest":
        report = run_selftest("full" if args.full else "quick")
        print(report.model_dump_json() if args.json else report.summary())
        return EXIT_OK if report.ok else EXIT_VERDICT_FALSE

    if not args.group:
        parser.print_usage(sys.stderr)
        print("error: --group is required for queries", file=sys.stderr)
        return EXIT_USAGE
    if args.command is None and args.batch is None:
        parser.print_usage(sys.stderr)
        print("error: give a command or --batch", file=sys.stderr)
        return EXIT_USAGE

    try:
        group = parse_group(args.group, settings.beta)
        logger.info(f"Group {group.describe()} with generators {', '.join(group.alphabet) or '(none)'}")

        if args.batch is not None:
            lines = args.batch.read_text(encoding="utf-8").splitlines()
            results = run_batch(group, lines, settings.radius, args.workers)
        else:
            results = [run_query(group, args.command, args.words, settings.radius)]
    except USAGE_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedError as e:
        logger.error(f"Unsupported: {e}")
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as e:
        print(f"error: cannot read batch file: {e}", file=sys.stderr)
        return EXIT_USAGE

    _print_results(results, args.json)

    if args.exit_verdict and len(results) == 1 and results[0].verdict is False:
        return EXIT_VERDICT_FALSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
