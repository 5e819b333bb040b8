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

"""Physical parameters of the perturbed boson-star energy."""

import dataclasses
from dataclasses import dataclass

import numpy as np
from qiskit.utils.validation import validate_min, validate_min_exclusive, validate_range_exclusive


@dataclass(frozen=True)
class ModelParams:
    """Parameters ``(alpha, beta, m, N)`` of the energy functional.

    Attributes:
        alpha: exponent of the long-range Riesz term, ``0 < alpha < 1``.
        beta: strength of the Riesz term; positive values are repulsive.
        mass_m: particle mass ``m >= 0`` entering ``sqrt(-Laplacian + m**2)``.
        constraint_n: the mass ``N > 0`` of admissible fields.

    Raises:
        ValueError: if a parameter is out of range.
    """

    alpha: float
    beta: float
    mass_m: float
    constraint_n: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "mass_m", "constraint_n"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError("{} must be finite, got {}".format(name, value))
            object.__setattr__(self, name, value)
        validate_range_exclusive("alpha", self.alpha, 0.0, 1.0)
        validate_min("mass_m", self.mass_m, 0.0)
        validate_min_exclusive("constraint_n", self.constraint_n, 0.0)

    def replace(self, **changes: float) -> "ModelParams":
        """A copy with some parameters changed."""
        return dataclasses.replace(self, **changes)
