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

"""Riesz kernels ``|x|**-theta`` as Fourier multipliers, and a direct summation oracle."""

import logging
from functools import lru_cache
from typing import Optional, Union

import numpy as np
from scipy import fft
from scipy.special import gamma

from ..exceptions import DomainError, GridMismatchError
from ..grid import ComplexField, Grid
from .multiplier import Multiplier

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 16


def riesz_constant(theta: float) -> float:
    """``C(theta) = 2**(3-theta) pi**(3/2) Gamma((3-theta)/2) / Gamma(theta/2)``.

    The Fourier transform of ``|x|**-theta`` in three dimensions is ``C(theta) / |xi|**(3-theta)``;
    ``C(1) = 4 pi``.
    """
    return float(
        2.0 ** (3.0 - theta) * np.pi ** 1.5 * gamma(0.5 * (3.0 - theta)) / gamma(0.5 * theta)
    )


def riesz_zero_mode(grid: Grid, theta: float) -> float:
    """The zero-mode value ``4 pi (L/2)**(3-theta) / (3-theta)``.

    This is the integral of ``|x|**-theta`` over the ball inscribed in the box. It shifts the
    potential by a constant times the total mass.
    """
    return float(4.0 * np.pi * (0.5 * grid.length) ** (3.0 - theta) / (3.0 - theta))


class RieszKernel:
    """The periodic kernel ``|x|**-theta`` represented by its multiplier."""

    __slots__ = ("_theta", "_multiplier")

    def __init__(self, theta: float, multiplier: Multiplier) -> None:
        self._theta = float(theta)
        self._multiplier = multiplier

    @property
    def theta(self) -> float:
        """The kernel exponent."""
        return self._theta

    @property
    def multiplier(self) -> Multiplier:
        """The Fourier symbol of the kernel."""
        return self._multiplier

    @property
    def grid(self) -> Grid:
        """The grid of the kernel."""
        return self._multiplier.grid

    def __repr__(self) -> str:
        return "RieszKernel(theta={}, grid={})".format(self._theta, self.grid)


def _validate_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 < theta < 2.0:
        raise DomainError("Riesz exponent must lie in (0, 2), got {}".format(theta))
    return theta


def riesz_kernel(grid: Grid, theta: float) -> RieszKernel:
    """The kernel ``|x|**-theta`` on ``grid``.

    Raises:
        DomainError: if ``theta`` is outside ``(0, 2)``.
    """
    return _riesz_kernel(grid, _validate_theta(theta))


@lru_cache(maxsize=32)
def _riesz_kernel(grid: Grid, theta: float) -> RieszKernel:
    xi_squared = grid.xi_squared()
    values = np.empty(grid.shape)
    nonzero = xi_squared > 0
    values[nonzero] = riesz_constant(theta) * xi_squared[nonzero] ** (-0.5 * (3.0 - theta))
    values[~nonzero] = riesz_zero_mode(grid, theta)
    logger.debug("built Riesz kernel theta=%s on n=%d, L=%s", theta, grid.n, grid.length)
    return RieszKernel(theta, Multiplier(grid, values))


def _density_values(kernel_grid: Grid, rho: Union[ComplexField, np.ndarray]) -> np.ndarray:
    if isinstance(rho, ComplexField):
        if rho.grid != kernel_grid:
            raise GridMismatchError(
                "Density grid {} does not match kernel grid {}".format(rho.grid, kernel_grid)
            )
        if not rho.is_real():
            raise DomainError("Riesz convolution needs a real-valued density")
        return rho.values.real
    values = np.asarray(rho)
    if np.iscomplexobj(values):
        raise DomainError("Riesz convolution needs a real-valued density")
    if values.shape != kernel_grid.shape:
        raise GridMismatchError(
            "Density shape {} does not match grid {}".format(values.shape, kernel_grid)
        )
    return values


def convolve_riesz(kernel: RieszKernel, rho: Union[ComplexField, np.ndarray]) -> ComplexField:
    """The periodic convolution ``|x|**-theta * rho`` of a real density.

    Args:
        kernel: the kernel.
        rho: a real density, either a field with zero imaginary part or a real array.

    Returns:
        The convolution as a field with zero imaginary part.

    Raises:
        DomainError: if ``rho`` is complex valued.
        GridMismatchError: if ``rho`` does not live on the kernel grid.
    """
    values = _density_values(kernel.grid, rho)
    return ComplexField(kernel.grid, convolve_values(kernel.multiplier.values, fft.fftn(values)))


def convolve_values(symbol: np.ndarray, rho_hat: np.ndarray) -> np.ndarray:
    """Real part of ``ifftn(symbol * rho_hat)``; the imaginary residue is roundoff and dropped."""
    return fft.ifftn(symbol * rho_hat).real


def kernel_tabulation(kernel: RieszKernel) -> np.ndarray:
    """The kernel times the quadrature weight on the lattice of sample differences.

    Entry ``k`` is ``w * K_per(k h)``, the periodic kernel the multiplier represents.
    """
    return fft.ifftn(kernel.multiplier.values).real


def direct_convolution_oracle(
    theta: float, rho: Union[ComplexField, np.ndarray], grid: Optional[Grid] = None
) -> ComplexField:
    """Periodic convolution by explicit summation over source samples.

    ``out_j = sum_i T[(j - i) mod n] rho_i`` with ``T`` from :func:`kernel_tabulation`. The
    summation path shares only the kernel definition with :func:`convolve_riesz`.

    Args:
        theta: the kernel exponent.
        rho: a real density.
        grid: the grid, required when ``rho`` is a plain array.

    Raises:
        DomainError: if the grid has more than 16 points per axis or ``rho`` is complex.
    """
    if grid is None:
        if not isinstance(rho, ComplexField):
            raise DomainError("A grid is needed for an array density")
        grid = rho.grid
    if grid.n > ORACLE_MAX_N:
        raise DomainError(
            "Direct convolution is limited to n <= {}, got {}".format(ORACLE_MAX_N, grid.n)
        )
    kernel = riesz_kernel(grid, theta)
    values = _density_values(grid, rho)
    table = kernel_tabulation(kernel)
    out = np.zeros(grid.shape)
    for source in zip(*np.nonzero(values)):
        out += values[source] * np.roll(table, source, axis=(0, 1, 2))
    return ComplexField(grid, out)
