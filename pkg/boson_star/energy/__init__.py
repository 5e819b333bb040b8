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
Energy functional (:mod:`boson_star.energy`)
============================================

The perturbed boson-star energy, its gradient and multiplier, the diagnostic functionals of
the critical-mass theory, and the profile tools they rely on.

.. currentmodule:: boson_star.energy

Energy
======

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   EnergyBreakdown
   LagrangeMultiplier
   energy
   energy_and_gradient
   el_operator
   interaction_potential
   interaction_quadruple
   kinetic_form
   lagrange_multiplier

Diagnostics
===========

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   PohozaevReport
   gn_ratio
   pohozaev_report
   test_function_energy
   test_function_bound
   bound_scaling
   minimize_test_function_energy

Profile tools
=============

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   gaussian_field
   random_field
   center_of_mass
   shift_to_match
   recenter
   align_phase
   remove_global_phase
   rms_radius
   check_resolution
   dilate
   rescale_profile
"""

from .diagnostics import (
    PohozaevReport,
    bound_scaling,
    gn_ratio,
    minimize_test_function_energy,
    pohozaev_report,
    test_function_bound,
    test_function_energy,
)
from .energy_functional import (
    EnergyBreakdown,
    LagrangeMultiplier,
    el_operator,
    energy,
    energy_and_gradient,
    interaction_potential,
    interaction_quadruple,
    kinetic_form,
    lagrange_multiplier,
)
from .profile_tools import (
    align_phase,
    center_of_mass,
    check_resolution,
    dilate,
    gaussian_field,
    random_field,
    recenter,
    remove_global_phase,
    rescale_profile,
    rms_radius,
    shift_to_match,
)

__all__ = [
    "EnergyBreakdown",
    "LagrangeMultiplier",
    "energy",
    "energy_and_gradient",
    "el_operator",
    "interaction_potential",
    "interaction_quadruple",
    "kinetic_form",
    "lagrange_multiplier",
    "PohozaevReport",
    "gn_ratio",
    "pohozaev_report",
    "test_function_energy",
    "test_function_bound",
    "bound_scaling",
    "minimize_test_function_energy",
    "gaussian_field",
    "random_field",
    "center_of_mass",
    "shift_to_match",
    "recenter",
    "align_phase",
    "remove_global_phase",
    "rms_radius",
    "check_resolution",
    "dilate",
    "rescale_profile",
]
