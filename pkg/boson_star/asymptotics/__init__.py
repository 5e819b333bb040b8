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
Small-beta asymptotics (:mod:`boson_star.asymptotics`)
======================================================

Scans of ground states at the critical mass as ``beta`` decreases, power-law fits of the
scanned quantities, and the closed-form limits computed from ``Q``.

.. currentmodule:: boson_star.asymptotics

Scans and fits
==============

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   GridPolicy
   FixedGridPolicy
   ComovingGridPolicy
   ScanRow
   beta_scan
   scan_frame
   unconverged_betas
   energy_ratio_trend
   FitResult
   fit_exponent
   expected_exponent

Limits
======

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   gamma_from_q
   limit_constant
   limit_constant_variational
   rescaled_profile_error
"""

from .grid_policy import ComovingGridPolicy, FixedGridPolicy, GridPolicy
from .limit_profile import (
    gamma_from_q,
    limit_constant,
    limit_constant_variational,
    rescaled_profile_error,
)
from .power_law_fit import FitResult, expected_exponent, fit_exponent
from .scan import ScanRow, beta_scan, energy_ratio_trend, scan_frame, unconverged_betas

__all__ = [
    "GridPolicy",
    "FixedGridPolicy",
    "ComovingGridPolicy",
    "ScanRow",
    "beta_scan",
    "scan_frame",
    "unconverged_betas",
    "energy_ratio_trend",
    "FitResult",
    "fit_exponent",
    "expected_exponent",
    "gamma_from_q",
    "limit_constant",
    "limit_constant_variational",
    "rescaled_profile_error",
]
