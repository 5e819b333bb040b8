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
Computational grid (:mod:`boson_star.grid`)
===========================================

The periodic box, the discrete fields living on it, and their on-disk format.

.. currentmodule:: boson_star.grid

Types
=====

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   Grid
   ComplexField
   ModelParams

Operations
==========

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   inner
   mass
   normalize
   save_field
   load_field
   encode_field
   decode_field
"""

from .complex_field import ComplexField, inner, mass, normalize
from .field_io import decode_field, encode_field, load_field, save_field
from .grid import Grid
from .model_params import ModelParams

__all__ = [
    "Grid",
    "ComplexField",
    "ModelParams",
    "inner",
    "mass",
    "normalize",
    "save_field",
    "load_field",
    "encode_field",
    "decode_field",
]
