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

"""Test Riesz kernels and convolution"""

import unittest
from test import BosonStarTestCase

import numpy as np
from ddt import data, ddt

from boson_star.exceptions import DomainError, GridMismatchError
from boson_star.grid import ComplexField, Grid
from boson_star.spectral import (
    convolve_riesz,
    direct_convolution_oracle,
    riesz_constant,
    riesz_kernel,
    riesz_zero_mode,
)


@ddt
class TestRiesz(BosonStarTestCase):
    """Riesz kernel tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(8, 6.0)

    def test_coulomb_constant(self):
        """Test C(1) = 4 pi."""
        self.assertAlmostEqual(riesz_constant(1.0), 4.0 * np.pi, places=12)

    def test_coulomb_symbol(self):
        """Test the theta = 1 symbol is 4 pi / |xi|**2 away from zero."""
        kernel = riesz_kernel(self.grid, 1.0)
        xi_squared = self.grid.xi_squared()
        nonzero = xi_squared > 0
        np.testing.assert_allclose(
            kernel.multiplier.values[nonzero], 4.0 * np.pi / xi_squared[nonzero], rtol=1e-12
        )

    @data(0.25, 0.5, 1.0, 1.5)
    def test_zero_mode(self, theta):
        """Test the zero mode is the ball integral of the kernel."""
        kernel = riesz_kernel(self.grid, theta)
        expected = 4.0 * np.pi * 3.0 ** (3.0 - theta) / (3.0 - theta)
        self.assertAlmostEqual(kernel.multiplier.values[0, 0, 0] / expected, 1.0, places=12)
        self.assertAlmostEqual(riesz_zero_mode(self.grid, theta) / expected, 1.0, places=12)

    @data(0.5, 1.0)
    def test_oracle_agreement(self, theta):
        """Test the FFT convolution agrees with direct summation."""
        rng = np.random.default_rng(7)
        rho = rng.random(self.grid.shape)
        kernel = riesz_kernel(self.grid, theta)
        fast = convolve_riesz(kernel, rho).values.real
        slow = direct_convolution_oracle(theta, rho, self.grid).values.real
        error = np.max(np.abs(fast - slow)) / np.max(np.abs(slow))
        self.assertLess(error, 1e-10)

    def test_convolution_of_constant(self):
        """Test a constant density picks up only the zero mode."""
        theta = 0.5
        rho = ComplexField(self.grid, np.ones(self.grid.size))
        result = convolve_riesz(riesz_kernel(self.grid, theta), rho)
        np.testing.assert_allclose(
            result.values.real, riesz_zero_mode(self.grid, theta), rtol=1e-12
        )
        self.assertTrue(result.is_real())

    @data(0.0, 2.0, -0.5, 3.0)
    def test_invalid_theta(self, theta):
        """Test exponents outside (0, 2)."""
        with self.assertRaises(DomainError):
            riesz_kernel(self.grid, theta)

    def test_invalid_density(self):
        """Test complex densities and grid mismatches."""
        kernel = riesz_kernel(self.grid, 1.0)
        with self.assertRaises(DomainError):
            convolve_riesz(kernel, self.random_complex_field(self.grid))
        with self.assertRaises(GridMismatchError):
            convolve_riesz(kernel, np.ones((16, 16, 16)))

    def test_oracle_size_limit(self):
        """Test the direct summation refuses large grids."""
        grid = Grid(32, 6.0)
        with self.assertRaises(DomainError):
            direct_convolution_oracle(1.0, np.ones(grid.shape), grid)


if __name__ == "__main__":
    unittest.main()
