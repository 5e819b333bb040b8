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
Spectral operators (:mod:`boson_star.spectral`)
===============================================

Fourier-multiplier realizations of ``sqrt(-Laplacian + m**2)``, fractional Laplacians,
Sobolev weights and Riesz convolutions on the periodic grid.

.. currentmodule:: boson_star.spectral

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   Multiplier
   RieszKernel
   apply_multiplier
   quadratic_form
   relativistic_multiplier
   fractional_multiplier
   sobolev_multiplier
   sobolev_norm
   riesz_constant
   riesz_zero_mode
   riesz_kernel
   convolve_riesz
   kernel_tabulation
   direct_convolution_oracle
"""

from .multiplier import (
    Multiplier,
    apply_multiplier,
    fractional_multiplier,
    quadratic_form,
    relativistic_multiplier,
    sobolev_multiplier,
    sobolev_norm,
    spectral_quadratic_form,
)
from .riesz import (
    RieszKernel,
    convolve_riesz,
    convolve_values,
    direct_convolution_oracle,
    kernel_tabulation,
    riesz_constant,
    riesz_kernel,
    riesz_zero_mode,
)

__all__ = [
    "Multiplier",
    "RieszKernel",
    "apply_multiplier",
    "quadratic_form",
    "spectral_quadratic_form",
    "relativistic_multiplier",
    "fractional_multiplier",
    "sobolev_multiplier",
    "sobolev_norm",
    "riesz_constant",
    "riesz_zero_mode",
    "riesz_kernel",
    "convolve_riesz",
    "convolve_values",
    "kernel_tabulation",
    "direct_convolution_oracle",
]
