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

"""Fourier multipliers on the periodic frequency lattice.

Transforms are ``scipy.fft.fftn`` (unnormalized) and ``scipy.fft.ifftn`` (carrying ``1/n**3``),
so ``apply_multiplier`` realizes the operator with symbol ``a(xi)`` directly on samples and
quadratic forms follow from Parseval, ``<f, A f> = w / n**3 * sum(a * |fft(f)|**2)``.
"""

from functools import lru_cache

import numpy as np
from scipy import fft

from ..exceptions import DomainError, GridMismatchError
from ..grid import ComplexField, Grid


class Multiplier:
    """A real, non-negative symbol sampled on the frequency lattice of a grid."""

    __slots__ = ("_grid", "_values")

    def __init__(self, grid: Grid, values: np.ndarray) -> None:
        """
        Args:
            grid: the grid whose frequency lattice the symbol is sampled on.
            values: ``n**3`` symbol values in FFT order.

        Raises:
            DomainError: if the values have the wrong size or are negative or not finite.
        """
        array = np.array(values, dtype=np.float64).reshape(grid.shape)
        if not np.all(np.isfinite(array)):
            raise DomainError("Multiplier values must be finite")
        if np.any(array < 0):
            raise DomainError("Multiplier values must be non-negative")
        array.setflags(write=False)
        self._grid = grid
        self._values = array

    @classmethod
    def identity(cls, grid: Grid) -> "Multiplier":
        """The all-ones symbol."""
        return cls(grid, np.ones(grid.shape))

    @property
    def grid(self) -> Grid:
        """The grid of the symbol."""
        return self._grid

    @property
    def values(self) -> np.ndarray:
        """The read-only symbol array in FFT order."""
        return self._values

    @property
    def sup_norm(self) -> float:
        """``max |a(xi)|``, the operator norm of the multiplier."""
        return float(np.max(self._values))

    def apply(self, field: ComplexField) -> ComplexField:
        """See :func:`apply_multiplier`."""
        return apply_multiplier(self, field)

    def __repr__(self) -> str:
        return "Multiplier(grid={}, sup_norm={:.6g})".format(self._grid, self.sup_norm)


def _check_grid(mult: Multiplier, field: ComplexField) -> None:
    if mult.grid != field.grid:
        raise GridMismatchError(
            "Multiplier grid {} does not match field grid {}".format(mult.grid, field.grid)
        )


def apply_multiplier(mult: Multiplier, field: ComplexField) -> ComplexField:
    """Apply the operator with symbol ``mult`` to ``field``.

    Raises:
        GridMismatchError: if the multiplier and the field live on different grids.
    """
    _check_grid(mult, field)
    return ComplexField(field.grid, fft.ifftn(mult.values * fft.fftn(field.values)))


def quadratic_form(mult: Multiplier, field: ComplexField) -> float:
    """``Re <f, A f>`` by Parseval."""
    _check_grid(mult, field)
    return spectral_quadratic_form(mult.values, fft.fftn(field.values), field.grid)


def spectral_quadratic_form(symbol: np.ndarray, field_hat: np.ndarray, grid: Grid) -> float:
    """``w / n**3 * sum(symbol * |f_hat|**2)`` for an already transformed field."""
    power = field_hat.real ** 2 + field_hat.imag ** 2
    return float(grid.weight / grid.size * np.sum(symbol * power))


def relativistic_multiplier(grid: Grid, m: float) -> Multiplier:
    """The symbol ``sqrt(|xi|**2 + m**2)`` of the pseudo-relativistic kinetic operator.

    Raises:
        DomainError: if ``m`` is negative.
    """
    if m < 0:
        raise DomainError("Particle mass must be non-negative, got {}".format(m))
    return _relativistic(grid, float(m))


@lru_cache(maxsize=32)
def _relativistic(grid: Grid, m: float) -> Multiplier:
    return Multiplier(grid, np.sqrt(grid.xi_squared() + m * m))


def fractional_multiplier(grid: Grid, s: float) -> Multiplier:
    """The symbol ``|xi|**s`` of ``(-Laplacian)**(s/2)``.

    For ``s < 0`` the zero mode is excluded (set to zero), so ``s = -1`` gives the
    mean-free inverse of ``sqrt(-Laplacian)``.
    """
    return _fractional(grid, float(s))


@lru_cache(maxsize=32)
def _fractional(grid: Grid, s: float) -> Multiplier:
    xi_abs = np.sqrt(grid.xi_squared())
    if s >= 0:
        return Multiplier(grid, xi_abs ** s)
    values = np.zeros(grid.shape)
    nonzero = xi_abs > 0
    values[nonzero] = xi_abs[nonzero] ** s
    return Multiplier(grid, values)


def sobolev_multiplier(grid: Grid, s: float) -> Multiplier:
    """The Bessel-potential weight ``(1 + |xi|**2)**(s/2)``; ``s = 1/2`` weights H^(1/2)."""
    return _sobolev(grid, float(s))


@lru_cache(maxsize=32)
def _sobolev(grid: Grid, s: float) -> Multiplier:
    return Multiplier(grid, (1.0 + grid.xi_squared()) ** (0.5 * s))


def sobolev_norm(field: ComplexField, s: float = 0.5) -> float:
    """The discrete ``H^s`` norm ``||(1 + |xi|**2)**(s/2) f||_2``."""
    weight = _sobolev(field.grid, 2.0 * float(s)).values
    return float(np.sqrt(spectral_quadratic_form(weight, fft.fftn(field.values), field.grid)))
