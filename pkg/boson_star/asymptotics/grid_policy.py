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

"""Grid selection along a beta scan."""

from abc import ABC, abstractmethod

from qiskit.utils.validation import validate_min_exclusive, validate_range_exclusive

from ..grid import Grid


class GridPolicy(ABC):
    """Chooses the grid of each scan point."""

    @abstractmethod
    def grid_for(self, beta: float) -> Grid:
        """The grid used at ``beta``."""
        raise NotImplementedError


class FixedGridPolicy(GridPolicy):
    """The same grid for every ``beta``."""

    def __init__(self, grid: Grid) -> None:
        self._grid = grid

    def grid_for(self, beta: float) -> Grid:
        return self._grid

    def __repr__(self) -> str:
        return "FixedGridPolicy({})".format(self._grid)


class ComovingGridPolicy(GridPolicy):
    """A box shrinking with the minimizer, ``L(beta) = L_ref (beta / beta_ref)**(1/(1+alpha))``.

    The number of points stays fixed, so the profile keeps the same number of samples across
    its width as it concentrates.
    """

    def __init__(
        self, n: int, reference_length: float, reference_beta: float, alpha: float
    ) -> None:
        validate_min_exclusive("reference_length", reference_length, 0.0)
        validate_min_exclusive("reference_beta", reference_beta, 0.0)
        validate_range_exclusive("alpha", alpha, 0.0, 1.0)
        self._n = n
        self._reference_length = reference_length
        self._reference_beta = reference_beta
        self._alpha = alpha

    def grid_for(self, beta: float) -> Grid:
        validate_min_exclusive("beta", beta, 0.0)
        ratio = beta / self._reference_beta
        return Grid(self._n, self._reference_length * ratio ** (1.0 / (1.0 + self._alpha)))

    def __repr__(self) -> str:
        return "ComovingGridPolicy(n={}, reference_length={}, reference_beta={}, alpha={})".format(
            self._n, self._reference_length, self._reference_beta, self._alpha
        )
