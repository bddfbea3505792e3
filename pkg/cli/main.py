#!/usr/bin/env python3
"""
Command-line interface for the quantum solvable algebra toolkit.
Provides a unified entry point for all workflows.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError

from cli.admissibility_checker import admissibility_workflow
from cli.center_inspector import center_workflow
from cli.identity_verifier import SUITES, verify_workflow
from cli.reporting import EXIT_FAILED, EXIT_INVALID, EXIT_OK
from cli.rep_builder import rep_workflow
from cli.spec_validator import validate_workflow
from cli.strata_reporter import strata_workflow
from utils.config import settings
from utils.errors import InvalidInputError
from utils.run_log import log_run_event

logger = logging.getLogger(__name__)


def _l_range(text: str) -> List[int]:
    try:
        first, last = (int(part) for part in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got '{text}'")
    return [first, last]


def setup_parser() -> argparse.ArgumentParser:
    """
    Set up the command-line argument parser.

    Returns:
        Configured argument parser
    """
    parser = argparse.ArgumentParser(
        description="Quantum solvable algebras at roots of unity",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check an algebra file
  qsolv validate fixtures/weyl.toml

  # Center of the associated torus at a primitive cube root
  qsolv center fixtures/quantum_plane.toml --l 3

  # Admissible root orders between 2 and 12
  qsolv admissible fixtures/weyl.toml --l-range 2..12

  # Stratum report with built representations
  qsolv strata fixtures/quantum_plane.toml --l 5 --build-reps

  # Representation for a central character
  qsolv rep fixtures/weyl.toml --l 2 --stratum invert-y --char fixtures/weyl_character.toml

  # Identity suites
  qsolv verify fixtures/weyl.toml --l 2 --seed 7 --degree 3 --suite all
        """
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--out", help="Write the JSON report to this path")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    validate_parser = subparsers.add_parser("validate", help="Check the structural conditions of an algebra")
    validate_parser.add_argument("file", help="Algebra file (TOML)")

    center_parser = subparsers.add_parser("center", help="Center of the associated quantum torus")
    center_parser.add_argument("file", help="Algebra file (TOML)")
    center_parser.add_argument("--l", type=int, required=True, help="Root order")

    admissible_parser = subparsers.add_parser("admissible", help="Admissibility of root orders")
    admissible_parser.add_argument("file", help="Algebra file (TOML)")
    group = admissible_parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--l", type=int, help="Root order")
    group.add_argument("--l-range", type=_l_range, help="Inclusive range A..B")

    strata_parser = subparsers.add_parser("strata", help="Stratum report")
    strata_parser.add_argument("file", help="Algebra file (TOML)")
    strata_parser.add_argument("--l", type=int, required=True, help="Root order")
    strata_parser.add_argument("--build-reps", action="store_true",
                               help="Build and verify a representation per stratum")

    rep_parser = subparsers.add_parser("rep", help="Build or check a representation")
    rep_parser.add_argument("file", help="Algebra file (TOML)")
    rep_parser.add_argument("--l", type=int, required=True, help="Root order")
    rep_parser.add_argument("--char", help="Character file (TOML); trivial character when omitted")
    rep_parser.add_argument("--stratum", help="Stratum label")
    rep_parser.add_argument("--matrices", help="Generator matrices (TOML) to verify instead of building")

    verify_parser = subparsers.add_parser("verify", help="Run the identity suites")
    verify_parser.add_argument("file", help="Algebra file (TOML)")
    verify_parser.add_argument("--l", type=int, required=True, help="Root order")
    verify_parser.add_argument("--seed", type=int, default=None, help="Random seed")
    verify_parser.add_argument("--degree", type=int, default=None, help="Maximal degree of random elements")
    verify_parser.add_argument("--cases", type=int, default=None, help="Random cases per identity")
    verify_parser.add_argument("--suite", choices=SUITES, default="all", help="Which suite to run")

    return parser


def validate_args(args: argparse.Namespace) -> bool:
    """
    Validate command-line arguments.

    Args:
        args: Parsed command-line arguments

    Returns:
        True if arguments are valid, False otherwise
    """
    if not os.path.isfile(args.file):
        logger.error(f"File not found: {args.file}")
        return False

    l_values = []
    if getattr(args, "l", None) is not None:
        l_values.append(args.l)
    if getattr(args, "l_range", None) is not None:
        first, last = args.l_range
        if first > last:
            logger.error(f"Empty range {first}..{last}")
            return False
        l_values.append(first)
    if any(l < 2 for l in l_values):
        logger.error(f"Root orders must be at least 2, got {l_values}")
        return False

    if args.command == "rep":
        for path in (args.char, args.matrices):
            if path and not os.path.isfile(path):
                logger.error(f"File not found: {path}")
                return False
        if args.char and args.matrices:
            logger.error("--char and --matrices cannot be combined")
            return False

    elif args.command == "verify":
        if args.degree is not None and args.degree < 0:
            logger.error(f"Degree must be nonnegative, got {args.degree}")
            return False
        if args.cases is not None and args.cases < 1:
            logger.error(f"Cases must be positive, got {args.cases}")
            return False

    return True


def run_command(args: argparse.Namespace) -> int:
    """
    Run the specified command.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success, 1 for a failed check, 2 for invalid input)
    """
    if args.command == "validate":
        return validate_workflow(args.file, args.out)

    elif args.command == "center":
        return center_workflow(args.file, args.l, args.out)

    elif args.command == "admissible":
        return admissibility_workflow(args.file, l=args.l, l_range=args.l_range, out=args.out)

    elif args.command == "strata":
        return strata_workflow(args.file, args.l, build_reps=args.build_reps, out=args.out)

    elif args.command == "rep":
        return rep_workflow(args.file, args.l, char_path=args.char, stratum_label=args.stratum,
                            matrices_path=args.matrices, out=args.out)

    elif args.command == "verify":
        return verify_workflow(args.file, args.l, seed=args.seed, degree=args.degree, cases=args.cases,
                               suite=args.suite, out=args.out)

    else:
        logger.error(f"Unknown command: {args.command}")
        return EXIT_INVALID


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the CLI.

    Args:
        argv: Command-line arguments

    Returns:
        Exit code (0 for success, 1 for a failed check, 2 for invalid input)
    """
    parser = setup_parser()

    if argv is None:
        args = parser.parse_args()
    else:
        args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format=settings.LOG_FORMAT,
    )

    if not args.command:
        parser.print_help()
        return EXIT_OK

    if not validate_args(args):
        return EXIT_INVALID

    log_run_event("command_started", {"command": args.command, "file": args.file})
    try:
        code = run_command(args)
    except (InvalidInputError, ValidationError) as e:
        logger.error(f"Invalid input: {e}")
        code = EXIT_INVALID
    except Exception as e:
        logger.exception(f"Error running command: {e}")
        code = EXIT_FAILED
    log_run_event("command_finished", {"command": args.command, "file": args.file, "exit_code": code})
    return code


if __name__ == "__main__":
    sys.exit(main())
