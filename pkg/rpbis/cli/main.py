"""
Entry point of the ``rpbis`` executable.

Exit codes: ``bisim`` and ``distinguish`` return 0 for bisimilar states and 1
for distinguished ones, ``check`` returns 0 when the formula holds and 1
otherwise, ``selftest`` returns 0 iff every case passes. Errors return 2.
"""

import argparse
import json
import logging
import sys

from rpbis import __version__
from rpbis.cli import commands
from rpbis.exceptions import RpbisError
from rpbis.logic.formula import LogicId
from rpbis.oracle.generator import GenParams
from rpbis.utils import settings

_logger = logging.getLogger(__name__)

EXIT_ERROR = 2


def _print_report(report, as_json: bool, show_formula: bool):
    if as_json:
        print(report.to_json(indent=2))
    elif show_formula and report.formula is not None:
        print(report.formula)
    else:
        print(report.verdict)
    return report.exit_code


def _run_bisim(args) -> int:
    report = commands.cmd_bisim(args.file, args.s1, args.s2)
    return _print_report(report, args.json, show_formula=False)


def _run_distinguish(args) -> int:
    report = commands.cmd_distinguish(args.file, args.s1, args.s2,
                                      LogicId.from_name(args.logic), args.decimal)
    return _print_report(report, args.json, show_formula=True)


def _run_check(args) -> int:
    holds = commands.cmd_check(args.file, args.state, args.formula)
    print("true" if holds else "false")
    return 0 if holds else 1


def _run_canon(args) -> int:
    print(commands.cmd_canon(args.file, args.state, args.depth, args.dot, args.decimal))
    return 0


def _run_partition(args) -> int:
    partition = commands.cmd_partition(args.file)
    if args.json:
        print(json.dumps({"blocks": [sorted(block) for block in partition.blocks]}, indent=2))
    else:
        print(partition.to_frame().to_string())
    return 0


def _run_selftest(args) -> int:
    seed = settings.default_seed() if args.seed is None else args.seed
    params = GenParams(max_states=args.max_states, max_actions=args.max_actions,
                       max_branching=args.max_branching,
                       denominator_bound=args.denominator_bound, seed=seed)
    result = commands.cmd_selftest(args.cases, seed, args.workers, params)

    print(f"seed {result.seed}, {len(result.cases)} cases")
    if result.cases:
        print(result.summary.to_string())
    for case in result.cases:
        if not case.passed:
            print(f"FAILED case {case.index} (case seed {case.seed}): {case.failures[0]}")
        elif case.flagged:
            print(f"FLAGGED case {case.index} (case seed {case.seed}): {case.flags[0]}")
    if result.flagged_seeds:
        print(f"flagged seeds: {' '.join(str(s) for s in result.flagged_seeds)}")
    if not result.passed:
        print(f"failing seeds: {' '.join(str(s) for s in result.failing_seeds)}")
        return 1
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpbis",
        description="Probabilistic bisimilarity and distinguishing formulas for reactive "
                    "probabilistic labeled transition systems",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-vv for debug output)")
    sub = parser.add_subparsers(dest="command", required=True)

    file_help = "system file, or fixture:<name> for a shipped fixture"

    bisim = sub.add_parser("bisim", help="decide whether two states are bisimilar")
    bisim.add_argument("file", help=file_help)
    bisim.add_argument("s1")
    bisim.add_argument("s2")
    bisim.add_argument("--json", action="store_true", help="print a JSON report")
    bisim.set_defaults(handler=_run_bisim)

    distinguish = sub.add_parser("distinguish", help="build a formula separating two states")
    distinguish.add_argument("file", help=file_help)
    distinguish.add_argument("s1")
    distinguish.add_argument("s2")
    distinguish.add_argument("--logic", choices=[logic.value for logic in LogicId], default="or",
                             help="formula fragment (default: or)")
    distinguish.add_argument("--json", action="store_true", help="print a JSON report")
    distinguish.add_argument("--decimal", action="store_true",
                             help="render terminating bounds as decimals")
    distinguish.set_defaults(handler=_run_distinguish)

    check = sub.add_parser("check", help="model check a formula at a state")
    check.add_argument("file", help=file_help)
    check.add_argument("state")
    check.add_argument("formula")
    check.set_defaults(handler=_run_check)

    canon = sub.add_parser("canon", help="print the canonical tree of a state")
    canon.add_argument("file", help=file_help)
    canon.add_argument("state")
    canon.add_argument("--depth", type=_natural, default=None,
                       help="pruning level (default: number of states)")
    canon.add_argument("--dot", action="store_true", help="print Graphviz DOT")
    canon.add_argument("--decimal", action="store_true",
                       help="render terminating weights as decimals")
    canon.set_defaults(handler=_run_canon)

    partition = sub.add_parser("partition", help="print the bisimulation classes")
    partition.add_argument("file", help=file_help)
    partition.add_argument("--json", action="store_true", help="print the blocks as JSON")
    partition.set_defaults(handler=_run_partition)

    selftest = sub.add_parser("selftest", help="run the randomised property suite")
    selftest.add_argument("--cases", type=_natural, default=settings.DEFAULT_CASES)
    selftest.add_argument("--seed", type=int, default=None,
                          help=f"base seed (default: ${settings.SEED_ENV_VAR} or {settings.DEFAULT_SEED})")
    selftest.add_argument("--workers", type=_positive_int, default=settings.DEFAULT_WORKERS)
    selftest.add_argument("--max-states", type=_positive_int, default=6)
    selftest.add_argument("--max-actions", type=_positive_int, default=3)
    selftest.add_argument("--max-branching", type=_positive_int, default=2)
    selftest.add_argument("--denominator-bound", type=_positive_int, default=8)
    selftest.set_defaults(handler=_run_selftest)

    return parser


def _configure_logging(verbosity: int):
    if verbosity <= 0:
        level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (RpbisError, OSError) as err:
        print(f"rpbis: error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
