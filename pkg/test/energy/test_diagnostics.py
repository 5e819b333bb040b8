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

"""Test diagnostics and profile tools"""

import unittest
from test import BosonStarTestCase

import numpy as np
from ddt import data, ddt, unpack

from boson_star.energy import diagnostics
from boson_star.energy import (
    align_phase,
    bound_scaling,
    center_of_mass,
    check_resolution,
    dilate,
    energy,
    gaussian_field,
    gn_ratio,
    interaction_quadruple,
    minimize_test_function_energy,
    pohozaev_report,
    recenter,
    remove_global_phase,
    rms_radius,
    shift_to_match,
)
from boson_star.exceptions import DomainError, ResolutionError
from boson_star.grid import ComplexField, Grid, ModelParams, inner


@ddt
class TestDiagnostics(BosonStarTestCase):
    """Diagnostic functional tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(32, 12.0)
        self.q_field = gaussian_field(self.grid, 1.0, target_n=2.0)

    @data(0.5, 2.0, 3.0)
    def test_gn_ratio_homogeneous(self, scale):
        """Test the quotient does not depend on the amplitude."""
        self.assertAlmostEqual(
            gn_ratio(self.q_field * scale) / gn_ratio(self.q_field), 1.0, places=10
        )

    def test_gn_ratio_dilation_two_grids(self):
        """Test the quotient is unchanged by a dilation onto another grid."""
        wide = gaussian_field(Grid(16, 12.0), 1.5, target_n=2.0)
        narrow = gaussian_field(Grid(32, 8.0), 1.0, target_n=2.0)
        self.assertAlmostEqual(gn_ratio(narrow) / gn_ratio(wide), 1.0, delta=1e-2)
        # lattice points map onto lattice points
        lattice = dilate(wide, 1.5, Grid(16, 8.0))
        self.assertAlmostEqual(gn_ratio(lattice) / gn_ratio(wide), 1.0, places=10)

    def test_gn_ratio_zero_field(self):
        """Test the quotient of the zero field."""
        with self.assertRaises(DomainError):
            gn_ratio(ComplexField.zeros(self.grid))

    def test_pohozaev_scaling(self):
        """Test how the Pohozaev ratios scale with the amplitude."""
        report = pohozaev_report(self.q_field)
        doubled = pohozaev_report(self.q_field * 2.0)
        self.assertAlmostEqual(doubled.kinetic_ratio, report.kinetic_ratio)
        self.assertAlmostEqual(doubled.coulomb_ratio / report.coulomb_ratio, 4.0)
        self.assertAlmostEqual(
            report.balance_ratio, 2.0 * report.kinetic_ratio / (2.0 * report.coulomb_ratio)
        )
        self.assertTrue(report.within(np.inf))
        with self.assertRaises(DomainError):
            pohozaev_report(ComplexField.zeros(self.grid))

    def test_test_function_energy_identity_scale(self):
        """Test the trial energy at scale one is the energy of the normalized profile."""
        params = ModelParams(alpha=0.5, beta=0.1, mass_m=1.0, constraint_n=1.5)
        value = diagnostics.test_function_energy(1.0, params, self.q_field)
        expected = energy(self.q_field.normalize(1.5), params).total
        self.assertAlmostEqual(value, expected, places=10)

    def test_test_function_energy_guards(self):
        """Test invalid and under-resolved scales."""
        params = ModelParams(alpha=0.5, beta=0.1, mass_m=1.0, constraint_n=1.5)
        with self.assertRaises(DomainError):
            diagnostics.test_function_energy(0.0, params, self.q_field)
        with self.assertRaises(ResolutionError):
            diagnostics.test_function_energy(0.1, params, self.q_field)

    def test_bound_critical_mass(self):
        """Test the bound reduces to the Riesz term at m = 0 and N = N_c."""
        params = ModelParams(alpha=0.5, beta=0.2, mass_m=0.0, constraint_n=2.0)
        lam = 1.7
        expected = 0.2 * lam ** 0.5 / 4.0 * interaction_quadruple(self.q_field, 0.5)
        self.assertAlmostEqual(
            diagnostics.test_function_bound(lam, params, self.q_field), expected, places=10
        )

    def test_bound_scaling(self):
        """Test the balancing scale and its domain."""
        self.assertAlmostEqual(bound_scaling(2.0, 1.0, 0.0, 0.5), 1.0)
        self.assertAlmostEqual(bound_scaling(2.0, 2.0, 0.125, 0.5), 1.0 / 0.125 ** (2.0 / 3.0))
        with self.assertRaises(DomainError):
            bound_scaling(2.0, 3.0, 0.1, 0.5)
        with self.assertRaises(DomainError):
            bound_scaling(2.0, 1.0, -0.1, 0.5)
        with self.assertRaises(DomainError):
            bound_scaling(2.0, 2.0, 0.0, 0.5)

    def test_minimize_test_function_energy(self):
        """Test the scan returns its lowest admissible value."""
        params = ModelParams(alpha=0.5, beta=0.1, mass_m=1.0, constraint_n=1.0)
        lambdas = [0.8, 1.0, 1.25, 0.1]
        lam, value = minimize_test_function_energy(params, self.q_field, lambdas)
        self.assertIn(lam, lambdas[:3])
        for other in lambdas[:3]:
            self.assertLessEqual(
                value, diagnostics.test_function_energy(other, params, self.q_field) + 1e-12
            )
        with self.assertRaises(ResolutionError):
            minimize_test_function_energy(params, self.q_field, [0.1])


@ddt
class TestProfileTools(BosonStarTestCase):
    """Profile tool tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(32, 12.0)

    def test_center_of_mass_shift(self):
        """Test a lattice shift moves the centre by the shift."""
        field = gaussian_field(self.grid, 1.0)
        np.testing.assert_allclose(center_of_mass(field), [16.0, 16.0, 16.0], atol=1e-9)
        shifted = field.roll((3, -2, 5))
        np.testing.assert_allclose(center_of_mass(shifted), [19.0, 14.0, 21.0], atol=1e-9)
        np.testing.assert_array_equal(shift_to_match(shifted, field), [3, -2, 5])

    def test_recenter(self):
        """Test recentring an off-centre Gaussian."""
        field = gaussian_field(self.grid, 1.0, center=(1.5, -3.0, 0.0))
        np.testing.assert_allclose(center_of_mass(recenter(field)), [16.0, 16.0, 16.0], atol=1e-9)

    def test_phase_tools(self):
        """Test phase alignment and global phase removal."""
        field = gaussian_field(self.grid, 1.0)
        rotated = field * np.exp(0.8j)
        aligned = align_phase(rotated, field)
        np.testing.assert_allclose(aligned.values, field.values, atol=1e-12)
        np.testing.assert_allclose(remove_global_phase(rotated).values, field.values, atol=1e-12)
        self.assertAlmostEqual(inner(aligned, field).imag, 0.0)

    def test_rms_radius(self):
        """Test the rms radius of a Gaussian density."""
        field = gaussian_field(self.grid, 1.0)
        self.assertAlmostEqual(rms_radius(field), np.sqrt(1.5), places=6)
        self.assertAlmostEqual(rms_radius(field.roll((7, 0, -9))), np.sqrt(1.5), places=6)

    def test_check_resolution(self):
        """Test the resolution guard on narrow and wide profiles."""
        self.assertAlmostEqual(check_resolution(gaussian_field(self.grid, 1.0)), np.sqrt(1.5), 6)
        with self.assertRaises(ResolutionError):
            check_resolution(gaussian_field(self.grid, 0.1))
        with self.assertRaises(ResolutionError):
            check_resolution(gaussian_field(self.grid, 1.0), max_fraction=0.05)

    @data((3.8, True), (4.4, False), (8.0, False))
    @unpack
    def test_min_width_in_spacings(self, diameter_cells, rejected):
        """Test the lower bound applies to the rms diameter in grid spacings."""
        grid = Grid(32, 16.0)
        width = 0.5 * diameter_cells * grid.spacing / np.sqrt(1.5)
        field = gaussian_field(grid, width)
        if rejected:
            with self.assertRaises(ResolutionError):
                check_resolution(field)
        else:
            radius = check_resolution(field)
            self.assertGreaterEqual(2.0 * radius, 4.0 * grid.spacing)

    def test_dilate_identity(self):
        """Test dilation by one reproduces the samples."""
        field = gaussian_field(self.grid, 1.0) * np.exp(0.3j)
        np.testing.assert_allclose(dilate(field, 1.0).values, field.values, atol=1e-10)

    def test_dilate_width(self):
        """Test dilation scales the width and keeps the mass."""
        field = gaussian_field(self.grid, 1.2, target_n=1.0)
        narrow = dilate(field, 1.5, order=3)
        self.assertAlmostEqual(rms_radius(narrow) * 1.5 / rms_radius(field), 1.0, places=2)
        self.assertAlmostEqual(narrow.mass(), 1.0, places=2)

    def test_dilate_to_other_grid(self):
        """Test sampling a dilation on a finer grid over the same box."""
        field = gaussian_field(self.grid, 1.0)
        target = Grid(64, 12.0)
        refined = dilate(field, 1.0, target_grid=target, order=3)
        self.assertEqual(refined.grid, target)
        self.assertAlmostEqual(refined.mass() / field.mass(), 1.0, places=3)
        with self.assertRaises(DomainError):
            dilate(field, -1.0)


if __name__ == "__main__":
    unittest.main()
