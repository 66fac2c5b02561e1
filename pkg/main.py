#!/usr/bin/env python3
"""
Main entry point for the hypergeometric period toolkit.

Subcommands:
1. eval       - one generalized hypergeometric series value
2. solutions  - the fundamental system f_0..f_m
3. intersect  - cohomology and homology intersection matrices
4. periods    - the period row of phi_0 and its dual
5. verify     - twisted period relation (0, 0) and the quadratic identity
6. quad       - Euler integral and beta product checks by cube quadrature
7. sweep      - verify over many random parameter sets

The JSON document goes to standard output (or --out); logs go to standard error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

# Add the project root to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from config.settings import Settings, settings
from src.cli import EXIT_USAGE, RunConfig, run
from src.utils import setup_logging


def parse_m(text: str) -> List[int]:
    """'3' or a range '1..4'."""
    try:
        if ".." in text:
            first, last = (int(part) for part in text.split("..", 1))
            if last < first:
                raise ValueError
            return list(range(first, last + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range like 1..4, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="Parameter JSON document, inline or a file path")
    common.add_argument("--m", dest="m_values", type=parse_m, default=[], help="m for a random draw (sweep: range like 1..4)")
    common.add_argument("--seed", type=int, default=0, help="Seed of the random draw")
    common.add_argument("--x", type=float, help="Evaluation point")
    common.add_argument("--tol", type=float, default=1e-14, help="Series tolerance")
    common.add_argument("--out", help="Write the JSON document to this file")
    common.add_argument("--config", help="JSON settings file")
    common.add_argument("--log-level", help="Log level (default from settings)")

    parser = argparse.ArgumentParser(description="Hypergeometric periods and intersection numbers")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", parents=[common], help="Evaluate a hypergeometric series")
    eval_parser.add_argument("--upper", help="Upper parameters as a JSON array")
    eval_parser.add_argument("--lower", help="Lower parameters as a JSON array")

    subparsers.add_parser("solutions", parents=[common], help="Evaluate f_0..f_m")

    intersect_parser = subparsers.add_parser("intersect", parents=[common], help="Intersection matrices")
    intersect_parser.add_argument("--basis", choices=["phi", "psi", "mixed"], default="phi")

    subparsers.add_parser("periods", parents=[common], help="Period rows of phi_0")
    subparsers.add_parser("verify", parents=[common], help="Check the period relations")

    quad_parser = subparsers.add_parser("quad", parents=[common], help="Quadrature checks")
    quad_parser.add_argument("--level", type=int, help="tanh-sinh level (default per dimension)")
    quad_parser.add_argument("--shift", type=int, default=0, help="Exponent shift n of the beta product check")

    sweep_parser = subparsers.add_parser("sweep", parents=[common], help="Verify over random parameter sets")
    sweep_parser.add_argument("--count", type=int, default=20, help="Draws per m")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Worker processes")
    sweep_parser.add_argument("--csv", help="Write the table of runs to this CSV file")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    options = vars(args)
    config_file = options.pop("config")
    log_level = options.pop("log_level")

    try:
        if config_file:
            if not Path(config_file).is_file():
                raise OSError(f"no such file: {config_file}")
            settings.apply(Settings.from_file(config_file))
    except (ValidationError, ValueError, OSError) as e:
        setup_logging(log_level or settings.log_level)
        logger.error(f"Invalid config file {config_file}: {e}")
        return EXIT_USAGE

    setup_logging(log_level or settings.log_level, settings.log_file)

    try:
        config = RunConfig(**options)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
