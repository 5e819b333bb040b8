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

"""
Command line (:mod:`boson_star.cli`)
====================================

The ``boson-star`` command with the subcommands ``verify``, ``compute-q``, ``ground-state``,
``evolve`` and ``beta-scan``.

.. currentmodule:: boson_star.cli

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   RunConfig
   ArtifactWriter
   CheckResult
   build_parser
   build_run_config
   parse_config_text
   load_config_file
   run_checks
   cmd_verify
   cmd_compute_q
   cmd_ground_state
   cmd_evolve
   cmd_beta_scan
"""

from .artifacts import ArtifactWriter
from .commands import (
    cmd_beta_scan,
    cmd_compute_q,
    cmd_evolve,
    cmd_ground_state,
    cmd_verify,
)
from .main import build_parser
from .run_config import RunConfig, build_run_config, load_config_file, parse_config_text
from .verify import CheckResult, run_checks

__all__ = [
    "RunConfig",
    "ArtifactWriter",
    "CheckResult",
    "build_parser",
    "build_run_config",
    "parse_config_text",
    "load_config_file",
    "run_checks",
    "cmd_verify",
    "cmd_compute_q",
    "cmd_ground_state",
    "cmd_evolve",
    "cmd_beta_scan",
]
