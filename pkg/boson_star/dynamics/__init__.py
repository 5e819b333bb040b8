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
Time evolution (:mod:`boson_star.dynamics`)
===========================================

Strang splitting for the time-dependent equation, conservation monitors, the modulated
distance and the blow-up indicator.

.. currentmodule:: boson_star.dynamics

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   StrangIntegrator
   step_strang
   MonitorConfig
   TrajectoryDiagnostics
   TrajectoryVerdict
   evolve
   blowup_indicator
   modulated_distance
   sobolev_norm
   StabilityReport
   perturb_ground_state
   stability_experiment
"""

from ..spectral import sobolev_norm
from .modulation import modulated_distance
from .stability import StabilityReport, perturb_ground_state, stability_experiment
from .strang_integrator import StrangIntegrator, step_strang
from .trajectory import (
    MonitorConfig,
    TrajectoryDiagnostics,
    TrajectoryVerdict,
    blowup_indicator,
    evolve,
)

__all__ = [
    "StrangIntegrator",
    "step_strang",
    "MonitorConfig",
    "TrajectoryDiagnostics",
    "TrajectoryVerdict",
    "evolve",
    "blowup_indicator",
    "modulated_distance",
    "sobolev_norm",
    "StabilityReport",
    "perturb_ground_state",
    "stability_experiment",
]
