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

"""Second-order operator splitting for the time-dependent equation
``i d/dt psi = sqrt(-Laplacian + m**2) psi + V[psi] psi``."""

from typing import Dict

import numpy as np
from scipy import fft

from ..energy import interaction_potential
from ..exceptions import GridMismatchError, IntegratorError
from ..grid import ComplexField, Grid, ModelParams
from ..spectral import relativistic_multiplier


class StrangIntegrator:
    """Strang splitting with exactly solved substeps.

    One step of size ``dt`` applies half a kinetic step ``exp(-i dt/2 sqrt(|xi|**2 + m**2))``
    in frequency space, a full potential step ``exp(-i dt V)`` pointwise, and another half
    kinetic step. ``|psi|`` is unchanged by the potential step, so ``V`` is exact there and the
    mass is conserved up to transform roundoff.
    """

    def __init__(self, params: ModelParams, grid: Grid, interaction: bool = True) -> None:
        """
        Args:
            params: model parameters; ``constraint_n`` is not used.
            grid: the grid of the evolved fields.
            interaction: with ``False`` both convolution kernels are zeroed, leaving the free
                relativistic flow.
        """
        self._params = params
        self._grid = grid
        self._interaction = interaction
        self._symbol = relativistic_multiplier(grid, params.mass_m).values
        self._phases: Dict[float, np.ndarray] = {}

    @property
    def params(self) -> ModelParams:
        """The model parameters."""
        return self._params

    @property
    def grid(self) -> Grid:
        """The grid of the evolved fields."""
        return self._grid

    @property
    def interaction(self) -> bool:
        """Whether the nonlinear potential is switched on."""
        return self._interaction

    def _half_kinetic_phase(self, dt: float) -> np.ndarray:
        phase = self._phases.get(dt)
        if phase is None:
            if len(self._phases) > 4:
                self._phases.clear()
            phase = np.exp(-0.5j * dt * self._symbol)
            self._phases[dt] = phase
        return phase

    def step(self, psi: ComplexField, dt: float) -> ComplexField:
        """Advance ``psi`` by ``dt``; ``dt = 0`` is the identity and ``dt < 0`` runs backwards.

        Raises:
            GridMismatchError: if ``psi`` lives on another grid.
            IntegratorError: if the step produced non-finite values; ``last_state`` is ``psi``.
        """
        if psi.grid != self._grid:
            raise GridMismatchError(
                "Field on {} does not match integrator grid {}".format(psi.grid, self._grid)
            )
        if dt == 0:
            return psi
        half = self._half_kinetic_phase(dt)
        values = _checked(fft.ifftn(half * fft.fftn(psi.values)), psi, dt, "kinetic")
        if self._interaction:
            potential = interaction_potential(ComplexField(self._grid, values), self._params)
            values = _checked(values * np.exp(-1j * dt * potential), psi, dt, "potential")
        values = _checked(fft.ifftn(half * fft.fftn(values)), psi, dt, "kinetic")
        return ComplexField(self._grid, values)


def _checked(values: np.ndarray, psi: ComplexField, dt: float, substep: str) -> np.ndarray:
    if not np.all(np.isfinite(values)):
        raise IntegratorError(
            "Non-finite values after the {} substep of a step of {}".format(substep, dt), psi
        )
    return values


def step_strang(
    psi: ComplexField, params: ModelParams, dt: float, interaction: bool = True
) -> ComplexField:
    """One Strang step of size ``dt``; see :class:`StrangIntegrator`."""
    return StrangIntegrator(params, psi.grid, interaction).step(psi, dt)
