#!/usr/bin/env python3
# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

import sys
import argparse

from command_manager import CommandManager
from config import config
from constants import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR
from debug import get_logger, set_log_level
from errors import TropkitError
from report_utils import dump_error, exit_code, render
from version import PLUGIN, VERSION

logger = get_logger(__file__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PLUGIN, description="Exact tropical Hodge theory for matroids and weighted complexes")
    parser.add_argument("--version", action="version", version=f"{PLUGIN} {VERSION}")
    parser.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    parser.add_argument("--timing", action="store_true", help="include elapsed times in reports")
    parser.add_argument("--config", metavar="FILE", help="settings file (default ~/.config/tropkit/settings.txt)")
    parser.add_argument("--jobs", type=int, metavar="N", help="worker threads for independent checks")
    parser.add_argument("--log-level", metavar="LEVEL", help="DEBUG, INFO, WARNING or ERROR")
    groups = parser.add_subparsers(dest="group", required=True)

    matroid = groups.add_parser("matroid", help="matroids and their Chow rings").add_subparsers(dest="command", required=True)
    for name, text in (("info", "rank, flats and loops"), ("chi", "characteristic polynomial"), ("logconcave", "Whitney number log-concavity")):
        matroid.add_parser(name, help=text).add_argument("file", help="matroid file or builtin:NAME")
    chow = matroid.add_parser("chow", help="Kahler package of the Chow ring")
    chow.add_argument("file", help="matroid file or builtin:NAME")
    chow.add_argument("--p", type=int, help="degree to check")
    chow.add_argument("--check", default="hl,hr", help="comma separated: hl, hr, poincare")
    chow.add_argument("--all-p", action="store_true", help="check every p <= r/2")

    complex_ = groups.add_parser("complex", help="weighted polyhedral complexes").add_subparsers(dest="command", required=True)
    validate = complex_.add_parser("validate", help="structure, balancing, Q-smoothness")
    validate.add_argument("file", help="complex file or builtin:NAME")
    validate.add_argument("--checks", default="balancing", help="comma separated: balancing, qsmooth")
    bergman = complex_.add_parser("bergman", help="Bergman fan of a matroid")
    source = bergman.add_mutually_exclusive_group(required=True)
    source.add_argument("--uniform", metavar="R,N", help="uniform matroid U(R,N)")
    source.add_argument("--file", help="matroid file or builtin:NAME")
    bergman.add_argument("-o", "--output", metavar="OUT", help="write the fan to OUT")
    star = complex_.add_parser("star", help="star fan of a cell")
    star.add_argument("file", help="complex file or builtin:NAME")
    star.add_argument("--cell", type=int, required=True, metavar="ID", help="cell id in canonical order")
    cohomology = complex_.add_parser("cohomology", help="tropical (p,q)-cohomology")
    cohomology.add_argument("file", help="complex file or builtin:NAME")
    cohomology.add_argument("--p", type=int, help="exterior degree (default: all)")
    cohomology.add_argument("--compactify", action="store_true", help="compactify unbounded cells first")
    cohomology.add_argument("--emit-cochains", metavar="OUT", help="write the cochain complex to OUT")

    hodge = groups.add_parser("hodge", help="discrete Hodge theory").add_subparsers(dest="command", required=True)
    for name, text in (("verify", "harmonic dims against cohomology"), ("decompose", "exact + coexact + harmonic split")):
        command = hodge.add_parser(name, help=text)
        command.add_argument("file", help="complex or cochain file, or builtin:NAME")
        command.add_argument("--p", type=int, default=0, help="exterior degree for complex input")
        command.add_argument("--gram", help="identity, weighted or seed:K")
        command.add_argument("--compactify", action="store_true", help="compactify unbounded cells first")
        if name == "decompose":
            command.add_argument("--q", type=int, required=True, help="cochain degree")
            command.add_argument("--form", required=True, metavar="FORMFILE", help="form file")

    groups.add_parser("catalog", help="built-in matroids and complexes").add_subparsers(dest="command", required=True).add_parser("list")
    return parser


def main(argv=None) -> int:
    """
    Run one command and print its report.

    Returns:
        int: 0 when every check passes, 1 when a check fails, 2 on input errors,
        3 on unexpected internal errors
    """
    args = build_parser().parse_args(argv)
    if args.config:
        try:
            config.load_file(args.config)
        except FileNotFoundError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    if args.log_level:
        set_log_level(args.log_level)
    logger.info("%s %s", PLUGIN, VERSION)

    try:
        reports, data = CommandManager(timing=args.timing, jobs=args.jobs).handle(args)
    except TropkitError as e:
        logger.debug("Input error: %s", e)
        if args.json:
            print(dump_error(e))
        else:
            print(f"error: {e.error_id}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return EXIT_INTERNAL_ERROR

    print(render(reports, data, as_json=args.json))
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
