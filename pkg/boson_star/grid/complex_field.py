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

"""Complex-valued samples on a grid and the L2 structure they carry."""

import numbers
from typing import Callable, Sequence, Union

import numpy as np

from ..exceptions import DomainError, GridMismatchError
from .grid import Grid


class ComplexField:
    """An immutable complex field sampled on a :class:`Grid`.

    The samples are stored as a read-only ``(n, n, n)`` ``complex128`` array in row-major axis
    order. Construction rejects non-finite samples, so every field handed out by the package
    is finite.
    """

    __slots__ = ("_grid", "_values")

    def __init__(self, grid: Grid, values: Union[np.ndarray, Sequence[complex]]) -> None:
        """
        Args:
            grid: the grid the samples live on.
            values: ``n**3`` samples, flat or shaped ``(n, n, n)``.

        Raises:
            DomainError: if the sample count does not match the grid or a sample is not finite.
        """
        array = np.array(values, dtype=np.complex128)
        if array.size != grid.size:
            raise DomainError(
                "Field needs {} samples for grid n={}, got {}".format(grid.size, grid.n, array.size)
            )
        array = array.reshape(grid.shape)
        if not np.all(np.isfinite(array)):
            raise DomainError("Field samples must be finite")
        array.setflags(write=False)
        self._grid = grid
        self._values = array

    @classmethod
    def zeros(cls, grid: Grid) -> "ComplexField":
        """The zero field on ``grid``."""
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128))

    @classmethod
    def from_function(
        cls, grid: Grid, function: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    ) -> "ComplexField":
        """Samples ``function(x, y, z)`` on the grid points."""
        x, y, z = grid.mesh()
        return cls(grid, np.broadcast_to(function(x, y, z), grid.shape))

    @property
    def grid(self) -> Grid:
        """The grid of the field."""
        return self._grid

    @property
    def values(self) -> np.ndarray:
        """The read-only ``(n, n, n)`` sample array."""
        return self._values

    def density(self) -> np.ndarray:
        """The real density ``|f|**2`` as an array."""
        return self._values.real ** 2 + self._values.imag ** 2

    def is_real(self) -> bool:
        """Whether every imaginary part is exactly zero."""
        return not np.any(self._values.imag)

    def inner(self, other: "ComplexField") -> complex:
        """See :func:`inner`."""
        return inner(self, other)

    def mass(self) -> float:
        """See :func:`mass`."""
        return mass(self)

    def norm(self) -> float:
        """The L2 norm ``sqrt(mass)``."""
        return float(np.sqrt(mass(self)))

    def normalize(self, target_n: float) -> "ComplexField":
        """See :func:`normalize`."""
        return normalize(self, target_n)

    def roll(self, shift: Sequence[int]) -> "ComplexField":
        """Periodic lattice translation by ``shift`` samples per axis."""
        return ComplexField(self._grid, np.roll(self._values, tuple(shift), axis=(0, 1, 2)))

    def with_values(self, values: np.ndarray) -> "ComplexField":
        """A new field on the same grid."""
        return ComplexField(self._grid, values)

    def _check_same_grid(self, other: "ComplexField") -> None:
        if other.grid != self._grid:
            raise GridMismatchError(
                "Fields live on different grids: {} and {}".format(self._grid, other.grid)
            )

    def __add__(self, other: "ComplexField") -> "ComplexField":
        if not isinstance(other, ComplexField):
            return NotImplemented
        self._check_same_grid(other)
        return ComplexField(self._grid, self._values + other.values)

    def __sub__(self, other: "ComplexField") -> "ComplexField":
        if not isinstance(other, ComplexField):
            return NotImplemented
        self._check_same_grid(other)
        return ComplexField(self._grid, self._values - other.values)

    def __mul__(self, scalar: numbers.Number) -> "ComplexField":
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return ComplexField(self._grid, self._values * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: numbers.Number) -> "ComplexField":
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return ComplexField(self._grid, self._values / scalar)

    def __neg__(self) -> "ComplexField":
        return ComplexField(self._grid, -self._values)

    def __repr__(self) -> str:
        return "ComplexField(grid={}, mass={:.6g})".format(self._grid, mass(self))


def inner(f: ComplexField, g: ComplexField) -> complex:
    """The discrete L2 product ``w * sum(conj(f) * g)``.

    Raises:
        GridMismatchError: if the fields live on different grids.
    """
    if f.grid != g.grid:
        raise GridMismatchError("Fields live on different grids: {} and {}".format(f.grid, g.grid))
    return complex(f.grid.weight * np.vdot(f.values, g.values))


def mass(f: ComplexField) -> float:
    """The mass ``||f||_2**2``."""
    return float(f.grid.weight * np.sum(f.density()))


def normalize(f: ComplexField, target_n: float) -> ComplexField:
    """Scale ``f`` to mass ``target_n``.

    Raises:
        DomainError: if ``f`` is the zero field or ``target_n`` is not positive.
    """
    if target_n <= 0:
        raise DomainError("Target mass must be positive, got {}".format(target_n))
    current = mass(f)
    if current <= 0:
        raise DomainError("Cannot normalize the zero field")
    return ComplexField(f.grid, f.values * np.sqrt(target_n / current))
