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

"""The perturbed boson-star energy, its Euler-Lagrange operator and Lagrange multiplier.

For a field ``phi`` with density ``rho = |phi|**2`` the energy is

    E(phi) = 1/2 <phi, sqrt(-Laplacian + m**2) phi>
             - 1/4 int (|x|**-1 * rho) rho + beta/4 int (|x|**-alpha * rho) rho,

and ``H[phi] = sqrt(-Laplacian + m**2) phi + (beta |x|**-alpha * rho - |x|**-1 * rho) phi``
satisfies ``dE(phi)[h] = Re <H[phi], h>``.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy import fft

from ..exceptions import DomainError
from ..grid import ComplexField, Grid, ModelParams, mass
from ..spectral import (
    convolve_values,
    fractional_multiplier,
    relativistic_multiplier,
    riesz_kernel,
    spectral_quadratic_form,
)


@dataclass(frozen=True)
class EnergyBreakdown:
    """Term-by-term evaluation of the energy of one field.

    Attributes:
        kinetic: ``<phi, sqrt(-Laplacian + m**2) phi> / 2``.
        coulomb: ``int (|x|**-1 * rho) rho / 4``.
        riesz_alpha: ``int (|x|**-alpha * rho) rho / 4``.
        total: ``kinetic - coulomb + beta * riesz_alpha``.
        massless_kinetic: ``<phi, sqrt(-Laplacian) phi>`` (no factor 1/2).
        inv_kinetic: ``<phi, (-Laplacian)**(-1/2) phi>`` without the zero mode.
    """

    kinetic: float
    coulomb: float
    riesz_alpha: float
    total: float
    massless_kinetic: float
    inv_kinetic: float

    @property
    def coulomb_quadruple(self) -> float:
        """``int (|x|**-1 * rho) rho``."""
        return 4.0 * self.coulomb

    @property
    def riesz_quadruple(self) -> float:
        """``int (|x|**-alpha * rho) rho``."""
        return 4.0 * self.riesz_alpha


class LagrangeMultiplier(NamedTuple):
    """Two evaluations of the multiplier ``mu`` of the Euler-Lagrange equation."""

    projection: float
    """``Re <phi, H[phi]> / mass(phi)``."""

    formula: float
    """The energy identity ``(2E - int (|x|**-1 * rho) rho / 2 + beta/2 int (|x|**-alpha * rho)
    rho) / mass(phi)``."""

    discrepancy: float
    """``|projection - formula|``."""


def _evaluate(
    values: np.ndarray, grid: Grid, params: ModelParams, with_gradient: bool
) -> Tuple[EnergyBreakdown, Optional[np.ndarray]]:
    phi_hat = fft.fftn(values)
    relativistic = relativistic_multiplier(grid, params.mass_m).values
    kinetic = 0.5 * spectral_quadratic_form(relativistic, phi_hat, grid)
    massless = spectral_quadratic_form(fractional_multiplier(grid, 1.0).values, phi_hat, grid)
    inv = spectral_quadratic_form(fractional_multiplier(grid, -1.0).values, phi_hat, grid)

    rho = values.real ** 2 + values.imag ** 2
    rho_hat = fft.fftn(rho)
    v_coulomb = convolve_values(riesz_kernel(grid, 1.0).multiplier.values, rho_hat)
    v_riesz = convolve_values(riesz_kernel(grid, params.alpha).multiplier.values, rho_hat)
    coulomb = 0.25 * grid.weight * float(np.sum(v_coulomb * rho))
    riesz = 0.25 * grid.weight * float(np.sum(v_riesz * rho))

    breakdown = EnergyBreakdown(
        kinetic=kinetic,
        coulomb=coulomb,
        riesz_alpha=riesz,
        total=kinetic - coulomb + params.beta * riesz,
        massless_kinetic=massless,
        inv_kinetic=inv,
    )
    if not with_gradient:
        return breakdown, None
    gradient = fft.ifftn(relativistic * phi_hat) + (params.beta * v_riesz - v_coulomb) * values
    return breakdown, gradient


def energy(phi: ComplexField, params: ModelParams) -> EnergyBreakdown:
    """Evaluate the energy of ``phi`` term by term."""
    breakdown, _ = _evaluate(phi.values, phi.grid, params, with_gradient=False)
    return breakdown


def energy_and_gradient(
    phi: ComplexField, params: ModelParams
) -> Tuple[EnergyBreakdown, ComplexField]:
    """The energy breakdown and ``H[phi]`` from one shared set of transforms."""
    breakdown, gradient = _evaluate(phi.values, phi.grid, params, with_gradient=True)
    return breakdown, ComplexField(phi.grid, gradient)


def el_operator(phi: ComplexField, params: ModelParams) -> ComplexField:
    """The Euler-Lagrange operator ``H[phi]``, the L2 gradient of the energy."""
    return energy_and_gradient(phi, params)[1]


def interaction_potential(phi: ComplexField, params: ModelParams) -> np.ndarray:
    """The real mean-field potential ``beta |x|**-alpha * rho - |x|**-1 * rho``."""
    grid = phi.grid
    rho_hat = fft.fftn(phi.density())
    v_coulomb = convolve_values(riesz_kernel(grid, 1.0).multiplier.values, rho_hat)
    if params.beta == 0:
        return -v_coulomb
    v_riesz = convolve_values(riesz_kernel(grid, params.alpha).multiplier.values, rho_hat)
    return params.beta * v_riesz - v_coulomb


def interaction_quadruple(field: ComplexField, theta: float) -> float:
    """``int (|x|**-theta * |f|**2) |f|**2``."""
    grid = field.grid
    rho = field.density()
    potential = convolve_values(riesz_kernel(grid, theta).multiplier.values, fft.fftn(rho))
    return grid.weight * float(np.sum(potential * rho))


def kinetic_form(field: ComplexField, s: float = 1.0) -> float:
    """``<f, (-Laplacian)**(s/2) f>``; for ``s < 0`` the zero mode is left out."""
    symbol = fractional_multiplier(field.grid, s).values
    return spectral_quadratic_form(symbol, fft.fftn(field.values), field.grid)


def lagrange_multiplier(
    phi: ComplexField, params: ModelParams, e_value: Optional[float] = None
) -> LagrangeMultiplier:
    """Evaluate the multiplier ``mu`` of ``H[phi] = mu phi`` in two ways.

    Args:
        phi: the field, usually a converged minimizer.
        params: model parameters.
        e_value: the energy to use in the identity; defaults to the energy of ``phi``.

    Returns:
        The projection and energy-identity evaluations and their discrepancy.

    Raises:
        DomainError: if ``phi`` has zero mass.
    """
    phi_mass = mass(phi)
    if phi_mass <= 0:
        raise DomainError("The Lagrange multiplier needs a field with positive mass")
    breakdown, gradient = _evaluate(phi.values, phi.grid, params, with_gradient=True)
    projection = phi.grid.weight * float(np.vdot(phi.values, gradient).real) / phi_mass
    if e_value is None:
        e_value = breakdown.total
    formula = (
        2.0 * e_value
        - 0.5 * breakdown.coulomb_quadruple
        + 0.5 * params.beta * breakdown.riesz_quadruple
    ) / phi_mass
    return LagrangeMultiplier(projection, formula, abs(projection - formula))
