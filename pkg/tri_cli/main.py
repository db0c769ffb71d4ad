#!/usr/bin/env python3
"""
tricalc - Main Entry Point

Usage:
    python -m tri_cli <command> [options]
    tricalc <command> [options]  # if installed
"""

import sys
import argparse
import logging
from typing import List, Optional

from config import SettingsLoader

from . import __version__
from .commands import glue, lefschetz, moves, report
from .environment import EnvironmentChecker
from .error_handler import CommandErrorHandler

COMMANDS = {
    'validate': report,
    'euler': report,
    'boundary': report,
    'equiv': report,
    'stabilize': moves,
    'sum': moves,
    'closed': moves,
    'glue': glue,
    'compose': glue,
    'identity': glue,
    'from-lefschetz': lefschetz,
    'wrinkle': lefschetz,
    'h1': lefschetz,
}


def create_parser() -> argparse.ArgumentParser:
    """Create main argument parser."""
    parser = argparse.ArgumentParser(
        prog='tricalc',
        description='Relative trisection calculator',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  tricalc validate b4.json
  tricalc euler b4.json
  tricalc stabilize b4.json --relative 0 --variant band --sign +
  tricalc glue b4.json b4.json --pair 0:0
  tricalc identity --page-genus 0 --page-boundary 1
  tricalc equiv c00.json c31.json

Exit codes: 0 success, 1 invariant violation, 2 unreadable document.
        """
    )

    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}'
    )

    parser.add_argument(
        '--verbose', '-v',
        action='store_true',
        help='Log at DEBUG level to stderr'
    )

    parser.add_argument(
        '--output-format',
        choices=['table', 'json', 'pretty'],
        default=None,
        help='Report format (default: from settings, normally pretty)'
    )

    parser.add_argument(
        '--config',
        help='Settings YAML file (default: $TRICALC_CONFIG or config/tricalc.yaml)'
    )

    subparsers = parser.add_subparsers(
        dest='command',
        help='Available commands',
        metavar='COMMAND'
    )

    validate_parser = subparsers.add_parser('validate', help='Derived quantities and violated invariants')
    validate_parser.add_argument('file', help='Trisection document')

    euler_parser = subparsers.add_parser('euler', help='Euler characteristic')
    euler_parser.add_argument('file', help='Trisection document')

    boundary_parser = subparsers.add_parser('boundary', help='Induced boundary open books')
    boundary_parser.add_argument('file', help='Trisection document')

    stabilize_parser = subparsers.add_parser(
        'stabilize',
        help='Interior or relative stabilization (Hopf for open books, 1-2 pair for Lefschetz)'
    )
    stabilize_parser.add_argument('file', help='Trisection, open book or Lefschetz document')
    mode = stabilize_parser.add_mutually_exclusive_group(required=True)
    mode.add_argument('--interior', action='store_true', help='Interior stabilization')
    mode.add_argument('--relative', type=int, metavar='IDX', help='Boundary component (or page) index')
    stabilize_parser.add_argument(
        '--variant', choices=['band', 'handle'], default='band',
        help='band: same binding component; handle: different binding components'
    )
    stabilize_parser.add_argument('--sign', choices=['+', '-'], default='+', help='Twist sign')

    sum_parser = subparsers.add_parser('sum', help='Connected sum')
    sum_parser.add_argument('first')
    sum_parser.add_argument('second')

    glue_parser = subparsers.add_parser('glue', help='Glue along paired boundary components')
    glue_parser.add_argument('first')
    glue_parser.add_argument('second')
    glue_parser.add_argument(
        '--pair', action='append', required=True, metavar='I:J',
        help='Glue boundary I of the first to boundary J of the second (repeatable)'
    )
    glue_parser.add_argument(
        '--force', action='store_true',
        help='Skip the monodromy comparison (pages must still match)'
    )

    lf_parser = subparsers.add_parser('from-lefschetz', help='Relative trisection of a Lefschetz fibration')
    lf_parser.add_argument('file', help='Lefschetz document')
    lf_parser.add_argument('--crossings', type=int, help='Crossings of the 2-handle link (default: cycle count)')

    compose_parser = subparsers.add_parser('compose', help='Compose morphisms left to right')
    compose_parser.add_argument('files', nargs='+', metavar='FILE')

    identity_parser = subparsers.add_parser('identity', help='Identity morphism of a one-page open book')
    identity_parser.add_argument('--page-genus', type=int, required=True)
    identity_parser.add_argument('--page-boundary', type=int, required=True)

    equiv_parser = subparsers.add_parser('equiv', help='Exit 0 iff stably equivalent')
    equiv_parser.add_argument('first')
    equiv_parser.add_argument('second')

    wrinkle_parser = subparsers.add_parser('wrinkle', help='Wrinkle every Lefschetz singularity')
    wrinkle_parser.add_argument('file', help='Lefschetz document')

    h1_parser = subparsers.add_parser('h1', help='First homology of a Lefschetz fibration total space')
    h1_parser.add_argument('file', help='Lefschetz document')

    closed_parser = subparsers.add_parser('closed', help='Closed (g, k) for a given Euler characteristic')
    closed_parser.add_argument('--euler', type=int, required=True, metavar='CHI')
    closed_parser.add_argument('--genus', type=int, required=True, metavar='G')

    return parser


def configure_logging(level: str, fmt: str, verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level.upper(), logging.WARNING),
        format=fmt,
        stream=sys.stderr,
    )


def main(args: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = create_parser()
    parsed_args = parser.parse_args(args)

    settings = SettingsLoader.load(parsed_args.config)
    configure_logging(settings.logging.level, settings.logging.format, parsed_args.verbose)
    if parsed_args.output_format is None:
        parsed_args.output_format = settings.output.default_format

    checker = EnvironmentChecker()
    if not checker.check():
        for error in checker.get_errors():
            print(f"ERROR: {error}", file=sys.stderr)
        return 1

    if not parsed_args.command:
        parser.print_help()
        return 1

    error_handler = CommandErrorHandler(verbose=parsed_args.verbose)
    try:
        return COMMANDS[parsed_args.command].handle(parsed_args)
    except KeyboardInterrupt:
        print("\nInterrupted by user.", file=sys.stderr)
        return 130
    except Exception as e:
        return error_handler.handle_error(parsed_args.command, e)


if __name__ == '__main__':
    sys.exit(main())
