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
Utilities (:mod:`boson_star.utils`)
===================================

.. currentmodule:: boson_star.utils

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   atomic_write_bytes
   atomic_write_text
   make_rng
   spawn_generators
"""

from .atomic_io import atomic_write_bytes, atomic_write_text
from .seeding import make_rng, spawn_generators

__all__ = ["atomic_write_bytes", "atomic_write_text", "make_rng", "spawn_generators"]
