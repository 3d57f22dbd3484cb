"""``extscope`` command line: run scenarios, verify the worked examples, compute single invariants."""

import argparse
import logging
import sys
from typing import List, Optional

from extscope import __version__
from extscope.cli.compute import DEFAULT_RING, SUBCOMMANDS, compute
from extscope.cli.report import dumps, render_text, run_scenario
from extscope.cli.scenario import load_scenario
from extscope.cli.verify import SECTIONS, verify_paper
from extscope.config import Settings
from extscope.errors import ExtscopeError
from extscope.logger import LOGGER

VERBOSITY = (logging.WARNING, logging.INFO, logging.DEBUG)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) records")
    common.add_argument("--degree-cap", dest="degree_cap", type=int, help="highest S-pair degree (env: EXTSCOPE_DEGREE_CAP)")
    common.add_argument("--window", type=int, help="homological window (env: EXTSCOPE_WINDOW)")
    common.add_argument("--timing", action="store_true", help="record the seconds spent on every task")
    common.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    return common


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="extscope",
        description="Ext modules, grades and supports of finitely generated graded modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="run a scenario file")
    run.add_argument("path", help="TOML or JSON scenario")
    run.add_argument("--parallel", action="store_true", help="run tasks on a thread pool")

    verify = commands.add_parser("verify-paper", parents=[common], help="worked examples and property suites")
    verify.add_argument("--only", type=int, action="append", choices=SECTIONS, help="run only this section")
    verify.add_argument("-s", "--seed", type=int, help="corpus seed (env: EXTSCOPE_SEED)")
    verify.add_argument("--corpus-size", dest="corpus_size", type=int, help="monomial corpus size")
    verify.add_argument("--parallel", action="store_true", help="run tasks and suite items on a thread pool")

    single = commands.add_parser("compute", parents=[common], help="one computation from inline arguments")
    single.add_argument("subcommand", choices=SUBCOMMANDS)
    single.add_argument("--ring", default=DEFAULT_RING, help=f"ring, e.g. 'F5[X,Y,Z]/(X+Y+Z)^5' (default {DEFAULT_RING})")
    single.add_argument("--module", help="generators of I for the module R/I; '0' is the zero module")
    single.add_argument("--ideal", help="generators of an ideal I, used as the module I")
    single.add_argument("--free", type=int, help="rank of a free module")
    single.add_argument("--i", dest="index", type=int, help="Ext index")

    return parser.parse_args(argv)


def _execute(args: argparse.Namespace, settings: Settings):
    if args.command == "run":
        scenario = load_scenario(args.path, settings.degree_cap)
        return run_scenario(scenario, settings, args.parallel, args.timing)
    if args.command == "verify-paper":
        return verify_paper(args.only, args.seed, args.corpus_size, args.parallel, settings)
    return compute(args.subcommand, args.ring, args.module, args.ideal, args.free, args.index, args.window, settings)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point. Exit codes: 0 success, 1 failed expectations, 2 usage or parse error, 3 computation error."""

    args = _parse_args(argv)
    if args.verbose:
        LOGGER.set_level(VERBOSITY[min(args.verbose, len(VERBOSITY) - 1)])

    try:
        settings = Settings(degree_cap=args.degree_cap, window=args.window, seed=getattr(args, 'seed', None),
                            corpus_size=getattr(args, 'corpus_size', None))
        report = _execute(args, settings)
    except ExtscopeError as error:
        LOGGER.err(error).fields({'command': args.command}).error('command failed')
        return error.exit_code

    payload = report.to_json()
    print(dumps(payload) if args.output_format == "json" else render_text(payload), file=sys.stdout)
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
