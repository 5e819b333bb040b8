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
=======================================================
Boson stars with Riesz perturbation (:mod:`boson_star`)
=======================================================

.. currentmodule:: boson_star

Pseudospectral tools for the pseudo-relativistic Hartree energy with an added long-range
Riesz term on a periodic cube: the Fourier-multiplier operators and Riesz convolutions, the
energy functional and its gradient, constrained ground states and the optimizer ``Q`` fixing
the critical mass, Strang-split time evolution with stability and blow-up monitors, and the
scan of ground states as the Riesz strength goes to zero.

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

    Grid
    ComplexField
    ModelParams

The periodic grid, fields sampled on it, and the parameters of the energy.

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

    BosonStarError

The root of the errors raised by the package.

Submodules
==========

.. autosummary::
   :toctree:

   grid
   spectral
   energy
   algorithms
   dynamics
   asymptotics
   cli
   utils

"""

from .version import __version__
from .exceptions import BosonStarError
from .grid import ComplexField, Grid, ModelParams

__all__ = ["__version__", "Grid", "ComplexField", "ModelParams", "BosonStarError"]
