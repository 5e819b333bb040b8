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

"""Profile tools: initial data, centring, phase alignment, widths and dilations."""

from typing import Optional, Sequence

import numpy as np
from scipy import fft
from scipy.ndimage import map_coordinates

from ..exceptions import DomainError, ResolutionError
from ..grid import ComplexField, Grid, inner, normalize

# the width is the rms diameter 2 * rms_radius, so a width below 4h is an rms radius below 2h
DEFAULT_MIN_CELLS = 2.0
DEFAULT_MAX_FRACTION = 0.25


def gaussian_field(
    grid: Grid,
    width: float,
    target_n: Optional[float] = None,
    center: Sequence[float] = (0.0, 0.0, 0.0),
) -> ComplexField:
    """A real Gaussian ``exp(-|x - center|**2 / (2 width**2))``, optionally normalized."""
    if width <= 0:
        raise DomainError("Gaussian width must be positive, got {}".format(width))
    x, y, z = grid.mesh()
    r_squared = (x - center[0]) ** 2 + (y - center[1]) ** 2 + (z - center[2]) ** 2
    field = ComplexField(grid, np.exp(-0.5 * r_squared / width ** 2))
    return field if target_n is None else normalize(field, target_n)


def random_field(
    grid: Grid,
    rng: np.random.Generator,
    cutoff: Optional[float] = None,
    real: bool = False,
) -> ComplexField:
    """A random band-limited field.

    White noise is filtered in frequency space by ``exp(-|xi|**2 / (2 cutoff**2))``; without a
    cutoff the noise is left white.
    """
    values = rng.standard_normal(grid.shape)
    if not real:
        values = values + 1j * rng.standard_normal(grid.shape)
    if cutoff is not None:
        values = fft.ifftn(fft.fftn(values) * np.exp(-0.5 * grid.xi_squared() / cutoff ** 2))
        if real:
            values = values.real
    return ComplexField(grid, values)


def center_of_mass(field: ComplexField) -> np.ndarray:
    """Fractional sample indices of the density centre, one per axis.

    Each axis uses the periodic circular mean of the marginal density, so a lattice shift of
    the field moves the result by exactly that shift (modulo ``n``).

    Raises:
        DomainError: for the zero field.
    """
    density = field.density()
    n = field.grid.n
    phases = np.exp(2j * np.pi * np.arange(n) / n)
    center = np.empty(3)
    for axis in range(3):
        others = tuple(a for a in range(3) if a != axis)
        moment = np.dot(np.sum(density, axis=others), phases)
        if abs(moment) == 0:
            if not np.any(density):
                raise DomainError("The zero field has no centre of mass")
            center[axis] = 0.0
            continue
        center[axis] = (np.angle(moment) * n / (2.0 * np.pi)) % n
    return center


def _wrap(offset: np.ndarray, n: int) -> np.ndarray:
    return (offset + 0.5 * n) % n - 0.5 * n


def shift_to_match(field: ComplexField, reference: ComplexField) -> np.ndarray:
    """The integer lattice shift that moves the centre of ``reference`` onto that of ``field``."""
    offset = _wrap(center_of_mass(field) - center_of_mass(reference), field.grid.n)
    return np.rint(offset).astype(int)


def recenter(field: ComplexField) -> ComplexField:
    """Lattice-shift ``field`` so its centre of mass sits at the box centre (index ``n/2``)."""
    n = field.grid.n
    shift = np.rint(_wrap(0.5 * n - center_of_mass(field), n)).astype(int)
    return field.roll(shift)


def align_phase(field: ComplexField, reference: ComplexField) -> ComplexField:
    """``exp(i theta) field`` with ``theta`` minimizing the L2 distance to ``reference``."""
    overlap = inner(field, reference)
    if overlap == 0:
        return field
    return field * np.exp(1j * np.angle(overlap))


def remove_global_phase(field: ComplexField) -> ComplexField:
    """Rotate ``field`` so the sum of its samples is real and non-negative."""
    total = np.sum(field.values)
    if total == 0:
        return field
    return field * np.exp(-1j * np.angle(total))


def rms_radius(field: ComplexField) -> float:
    """Root mean square distance of the density from its periodic centre of mass."""
    grid = field.grid
    center = -0.5 * grid.length + grid.spacing * center_of_mass(field)
    density = field.density()
    r_squared = np.zeros(grid.shape)
    for axis, coordinate in enumerate(grid.mesh()):
        offset = _wrap((coordinate - center[axis]) / grid.spacing, grid.n) * grid.spacing
        r_squared = r_squared + offset ** 2
    return float(np.sqrt(np.sum(r_squared * density) / np.sum(density)))


def check_resolution(
    field: ComplexField,
    min_cells: float = DEFAULT_MIN_CELLS,
    max_fraction: float = DEFAULT_MAX_FRACTION,
) -> float:
    """Check that the rms radius of ``field`` lies in ``[min_cells h, max_fraction L]``.

    With the defaults a profile is under-resolved when its rms diameter, twice the rms radius,
    is below ``4h``, and too wide when its rms radius exceeds ``L/4``. A Gaussian
    ``exp(-r**2 / (2 w**2))`` has rms radius ``sqrt(3/2) w``.

    Returns:
        The rms radius.

    Raises:
        ResolutionError: if the profile is under-resolved or too wide for the box.
    """
    grid = field.grid
    width = rms_radius(field)
    if width < min_cells * grid.spacing:
        raise ResolutionError(
            "Profile width {:.4g} is below {} grid spacings (h={:.4g})".format(
                width, min_cells, grid.spacing
            )
        )
    if width > max_fraction * grid.length:
        raise ResolutionError(
            "Profile width {:.4g} exceeds {} of the box (L={:.4g})".format(
                width, max_fraction, grid.length
            )
        )
    return width


def dilate(
    field: ComplexField,
    lam: float,
    target_grid: Optional[Grid] = None,
    order: int = 1,
) -> ComplexField:
    """The mass-preserving dilation ``lam**(3/2) f(lam x)`` sampled on ``target_grid``.

    Values between samples come from spline interpolation of the given ``order`` (1 is
    trilinear) with periodic wrap.

    Args:
        field: the profile ``f``.
        lam: the dilation factor; values above one concentrate the profile.
        target_grid: where to sample the result, by default the grid of ``field``.
        order: spline order passed to ``scipy.ndimage.map_coordinates``.

    Raises:
        DomainError: if ``lam`` is not positive.
    """
    if lam <= 0:
        raise DomainError("Dilation factor must be positive, got {}".format(lam))
    source = field.grid
    target = source if target_grid is None else target_grid
    index = (lam * target.coordinates() + 0.5 * source.length) / source.spacing
    coordinates = np.stack(np.meshgrid(index, index, index, indexing="ij"))
    options = {"order": order, "mode": "grid-wrap", "prefilter": order > 1}
    real = map_coordinates(field.values.real, coordinates, **options)
    imag = map_coordinates(field.values.imag, coordinates, **options)
    return ComplexField(target, lam ** 1.5 * (real + 1j * imag))


def rescale_profile(field: ComplexField, lam: float, order: int = 1) -> ComplexField:
    """``Q^lam = lam**(3/2) Q(lam x)`` on the grid of ``field``."""
    return dilate(field, lam, order=order)
