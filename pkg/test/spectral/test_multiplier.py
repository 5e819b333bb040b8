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

"""Test Fourier multipliers"""

import unittest
from test import BosonStarTestCase

import numpy as np
from ddt import data, ddt

from boson_star.exceptions import DomainError, GridMismatchError
from boson_star.grid import ComplexField, Grid, inner
from boson_star.spectral import (
    Multiplier,
    apply_multiplier,
    fractional_multiplier,
    quadratic_form,
    relativistic_multiplier,
    sobolev_norm,
)


def plane_wave(grid: Grid, k) -> ComplexField:
    """``exp(i k.x)`` for an integer lattice vector ``k``."""
    scale = 2.0 * np.pi / grid.length
    return ComplexField.from_function(
        grid, lambda x, y, z: np.exp(1j * scale * (k[0] * x + k[1] * y + k[2] * z))
    )


@ddt
class TestMultiplier(BosonStarTestCase):
    """Multiplier tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(8, 2.0 * np.pi)

    @data((1, 0, 0), (1, 2, -3), (-4, 0, 2))
    def test_plane_wave_eigenrelation(self, k):
        """Test plane waves are eigenfunctions of the relativistic operator."""
        wave = plane_wave(self.grid, k)
        result = apply_multiplier(relativistic_multiplier(self.grid, 1.5), wave)
        eigenvalue = np.sqrt(sum(c * c for c in k) + 2.25)
        np.testing.assert_allclose(result.values, eigenvalue * wave.values, atol=1e-12)

    def test_identity(self):
        """Test the identity symbol leaves the field unchanged."""
        field = self.random_complex_field(self.grid, 1)
        result = Multiplier.identity(self.grid).apply(field)
        np.testing.assert_allclose(result.values, field.values, atol=1e-12)

    def test_self_adjoint(self):
        """Test <f, A g> = <A f, g> for a real symbol."""
        mult = relativistic_multiplier(self.grid, 1.0)
        f = self.random_complex_field(self.grid, 2)
        g = self.random_complex_field(self.grid, 3)
        lhs = inner(f, mult.apply(g))
        rhs = inner(mult.apply(f), g)
        self.assertAlmostEqual(abs(lhs - rhs) / abs(lhs), 0.0, places=10)

    def test_quadratic_form(self):
        """Test the Parseval quadratic form against a direct inner product."""
        mult = fractional_multiplier(self.grid, 1.0)
        field = self.random_complex_field(self.grid, 4)
        expected = inner(field, mult.apply(field)).real
        self.assertAlmostEqual(quadratic_form(mult, field) / expected, 1.0, places=10)

    def test_fractional_negative_power(self):
        """Test the zero mode of a negative power is excluded."""
        mult = fractional_multiplier(self.grid, -1.0)
        self.assertEqual(mult.values[0, 0, 0], 0.0)
        self.assertAlmostEqual(mult.values[0, 0, 2], 0.5)

    def test_sup_norm(self):
        """Test the operator norm of the relativistic symbol."""
        mult = relativistic_multiplier(self.grid, 0.0)
        self.assertAlmostEqual(mult.sup_norm, np.sqrt(3.0) * 4.0)

    def test_sobolev_norm_of_constant(self):
        """Test the H^(1/2) norm of a constant is its L2 norm."""
        field = ComplexField(self.grid, np.full(self.grid.size, 2.0))
        self.assertAlmostEqual(sobolev_norm(field, 0.5), field.norm())

    def test_errors(self):
        """Test invalid symbols and grid mismatches."""
        with self.assertRaises(DomainError):
            relativistic_multiplier(self.grid, -1.0)
        with self.assertRaises(DomainError):
            Multiplier(self.grid, -np.ones(self.grid.size))
        with self.assertRaises(DomainError):
            Multiplier(self.grid, np.full(self.grid.size, np.inf))
        field = self.random_complex_field(Grid(8, 1.0))
        with self.assertRaises(GridMismatchError):
            apply_multiplier(relativistic_multiplier(self.grid, 1.0), field)


if __name__ == "__main__":
    unittest.main()
