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

"""Periodic cubic computational box."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from ..exceptions import DomainError


@dataclass(frozen=True)
class Grid:
    """A periodic cube of side ``length`` sampled by ``n`` points per axis.

    Sample ``j`` along an axis sits at ``x_j = -length/2 + j * spacing``, so the box centre
    ``x = 0`` is the sample with index ``n // 2``. Frequencies follow the ``numpy.fft``
    ordering, ``2 pi / length * {0, 1, ..., n/2 - 1, -n/2, ..., -1}``.

    Attributes:
        n: points per axis, a power of two no smaller than 8.
        length: side length of the box.
    """

    n: int
    length: float

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise DomainError("Grid size must be an integer, got {}".format(self.n))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "length", float(self.length))
        if self.n < 8 or self.n & (self.n - 1):
            raise DomainError("Grid size must be a power of two >= 8, got {}".format(self.n))
        if not np.isfinite(self.length) or self.length <= 0:
            raise DomainError("Box length must be positive, got {}".format(self.length))

    @property
    def spacing(self) -> float:
        """The sample spacing ``h = length / n``."""
        return self.length / self.n

    @property
    def weight(self) -> float:
        """The quadrature weight ``h**3`` of one sample."""
        return self.spacing ** 3

    @property
    def volume(self) -> float:
        """The box volume ``length**3``."""
        return self.length ** 3

    @property
    def shape(self) -> Tuple[int, int, int]:
        """The sample array shape."""
        return (self.n, self.n, self.n)

    @property
    def size(self) -> int:
        """The number of samples ``n**3``."""
        return self.n ** 3

    @property
    def xi_max(self) -> float:
        """The largest frequency magnitude on the lattice, ``sqrt(3) pi n / length``."""
        return np.sqrt(3.0) * np.pi * self.n / self.length

    def coordinates(self) -> np.ndarray:
        """Sample positions along one axis."""
        return -0.5 * self.length + self.spacing * np.arange(self.n)

    def frequencies(self) -> np.ndarray:
        """Angular frequencies along one axis in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)

    def mesh(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Broadcastable position arrays ``(x, y, z)``."""
        x = self.coordinates()
        return x[:, None, None], x[None, :, None], x[None, None, :]

    def frequency_mesh(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Broadcastable frequency arrays ``(xi_x, xi_y, xi_z)``."""
        xi = self.frequencies()
        return xi[:, None, None], xi[None, :, None], xi[None, None, :]

    def xi_squared(self) -> np.ndarray:
        """``|xi|**2`` on the full frequency lattice (read-only, cached)."""
        return _xi_squared(self)

    def doubled(self) -> "Grid":
        """The grid with twice the points and twice the box, at the same spacing."""
        return Grid(2 * self.n, 2.0 * self.length)

    def with_length(self, length: float) -> "Grid":
        """The grid with the same number of points on a box of side ``length``."""
        return Grid(self.n, length)


@lru_cache(maxsize=32)
def _xi_squared(grid: Grid) -> np.ndarray:
    kx, ky, kz = grid.frequency_mesh()
    values = kx ** 2 + ky ** 2 + kz ** 2
    values.setflags(write=False)
    return values
