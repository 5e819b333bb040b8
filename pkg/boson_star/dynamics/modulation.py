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

"""Distance of a field to the orbit of a reference profile under translations and phases."""

import numpy as np

from ..energy import shift_to_match
from ..exceptions import DomainError, GridMismatchError
from ..grid import ComplexField, inner, mass
from ..spectral import sobolev_norm


def modulated_distance(psi: ComplexField, reference: ComplexField) -> float:
    """The ``H^{1/2}`` distance from ``psi`` to the modulated ``reference``.

    The reference is moved by the lattice shift matching the density centres of mass and then
    rotated by the phase ``arg <reference_shifted, psi>`` before the difference is measured
    with the multiplier ``(1 + |xi|**2)**(1/4)``.

    Raises:
        DomainError: for the zero reference.
        GridMismatchError: if the fields live on different grids.
    """
    if psi.grid != reference.grid:
        raise GridMismatchError(
            "Cannot compare fields on {} and {}".format(psi.grid, reference.grid)
        )
    if mass(reference) <= 0:
        raise DomainError("The modulated distance needs a nonzero reference")
    if mass(psi) <= 0:
        return sobolev_norm(reference, 0.5)
    shifted = reference.roll(shift_to_match(psi, reference))
    theta = np.angle(inner(shifted, psi))
    return sobolev_norm(psi - shifted * np.exp(1j * theta), 0.5)
