# This code is part of boson-star.
#
# (C) Copyright the boson-star developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Command-line entry point of ``boson-star``."""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from ..exceptions import BosonStarError, ConfigError
from ..version import __version__
from .commands import COMMANDS, EXIT_FAILED
from .run_config import RunConfig, build_run_config, load_config_file

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(name)s.%(funcName)s:%(levelname)s:%(asctime)s: %(message)s"

# flag -> (type, help); destinations match the RunConfig keys
_FLAGS = {
    "grid": (int, "points per axis, a power of two"),
    "box": (float, "box side length"),
    "alpha": (float, "Riesz exponent in (0, 1)"),
    "beta": (float, "Riesz strength"),
    "mass": (float, "particle mass m >= 0"),
    "n-target": (float, "mass constraint; default the critical mass of Q"),
    "tol": (float, "residual tolerance of the solvers"),
    "dt": (float, "time step"),
    "tmax": (float, "final time of evolve"),
    "out": (str, "output directory"),
    "seed": (int, "seed of all random streams"),
    "max-iters": (int, "iteration budget of the solvers"),
    "initial-field": (str, "QFLD file with the starting field"),
    "q-field": (str, "QFLD file with a precomputed Q"),
    "delta": (float, "relative perturbation of the initial field for evolve"),
    "sample-every": (int, "steps between diagnostic samples"),
    "snapshot-every": (int, "steps between QFLD snapshots, 0 for none"),
}


def _betas(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as ex:
        raise argparse.ArgumentTypeError("expected comma-separated numbers: {}".format(ex))


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file")
    for flag, (kind, text) in _FLAGS.items():
        common.add_argument("--" + flag, type=kind, default=None, help=text)
    common.add_argument("--betas", type=_betas, default=None, help="decreasing beta ladder")

    parser = argparse.ArgumentParser(
        prog="boson-star",
        description="Ground states, dynamics and small-beta asymptotics of boson stars.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help="run {}".format(name))
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the ``--config`` file, then the flags.

    Raises:
        ConfigError: for unknown keys or invalid values.
    """
    file_values = load_config_file(args.config) if args.config else {}
    overrides: Dict[str, Any] = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "config") and value is not None
    }
    return build_run_config(file_values, overrides)


def _configure_logging() -> None:
    level = os.environ.get("LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line; returns the process exit code."""
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args)
    except ConfigError as ex:
        print("configuration error: {}".format(ex), file=sys.stderr)
        return EXIT_FAILED
    logger.info("running %s with %s", args.command, config)
    try:
        return COMMANDS[args.command](config)
    except BosonStarError as ex:
        print("{} failed: {}".format(args.command, ex), file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
