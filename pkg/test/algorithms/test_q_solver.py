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

"""Test the optimizer Q and the critical mass"""

import unittest
from test import BosonStarTestCase

import numpy as np

from boson_star.algorithms import (
    BoxStudy,
    QProfile,
    SolverConfig,
    SolverResultStatus,
    compute_q,
    estimate_nc,
)
from boson_star.energy import center_of_mass, gaussian_field
from boson_star.grid import Grid


class TestQProfile(BosonStarTestCase):
    """QProfile tests on a synthetic profile."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(16, 10.0)
        self.profile = QProfile.from_field(gaussian_field(self.grid, 1.2, target_n=2.5))

    def test_from_field(self):
        """Test the diagnostics of a wrapped field."""
        self.assertAlmostEqual(self.profile.nc, 2.5)
        self.assertEqual(self.profile.grid, self.grid)
        self.assertEqual(self.profile.status, SolverResultStatus.SUCCESS)
        self.assertGreater(self.profile.residual, 0.0)
        self.assertEqual(self.profile.gn_value, self.profile.fval)
        self.assertIsNone(self.profile.box_study)

    def test_params(self):
        """Test the parameters stored with the profile."""
        params = self.profile.params(0.25)
        self.assertEqual(params.alpha, 0.25)
        self.assertEqual((params.beta, params.mass_m), (0.0, 0.0))
        self.assertAlmostEqual(params.constraint_n, 2.5)

    def test_estimate_nc_without_box_study(self):
        """Test the missing error bar is reported as nan with a warning."""
        with self.assertLogs("boson_star.algorithms.q_solver", level="WARNING"):
            nc, error = estimate_nc(self.profile)
        self.assertAlmostEqual(nc, 2.5)
        self.assertTrue(np.isnan(error))

    def test_estimate_nc_with_box_study(self):
        """Test the doubled-box value and the drift."""
        study = BoxStudy(self.grid, self.grid.doubled(), 2.5, 2.45)
        profile = self.profile.with_box_study(study)
        self.assertAlmostEqual(study.drift, -0.05)
        nc, error = estimate_nc(profile)
        self.assertEqual(nc, 2.45)
        self.assertAlmostEqual(error, 0.05)
        self.assertIs(profile.field, self.profile.field)


class TestComputeQ(BosonStarTestCase):
    """Optimizer search on a coarse grid."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.grid = Grid(32, 12.0)
        config = SolverConfig(max_iters=1500, residual_tol=1e-3, box_study=True)
        cls.profile = compute_q(cls.grid, config)

    def test_normalization(self):
        """Test Q is real, non-negative, centred and Coulomb-normalized."""
        field = self.profile.field
        self.assertTrue(field.is_real())
        self.assertTrue(np.all(field.values.real >= 0))
        np.testing.assert_allclose(center_of_mass(field), [16.0, 16.0, 16.0], atol=1.0)
        self.assertAlmostEqual(self.profile.pohozaev.coulomb_ratio, 1.0, places=8)

    def test_critical_mass(self):
        """Test the mass is twice the quotient and of the expected size."""
        self.assertAlmostEqual(self.profile.nc / (2.0 * self.profile.gn_value), 1.0, delta=1e-2)
        self.assertGreater(self.profile.nc, 1.5)
        self.assertLess(self.profile.nc, 4.0)
        self.assertAlmostEqual(self.profile.pohozaev.kinetic_ratio, 1.0, delta=1e-2)

    def test_trace(self):
        """Test the quotient never increases along the flow."""
        values = [record.energy for record in self.profile.trace]
        self.assertGreater(len(values), 1)
        self.assertLess(values[-1], values[0])

    def test_box_doubling(self):
        """Test the critical mass moves by at most 2% when the box doubles."""
        study = self.profile.box_study
        self.assertEqual(study.fine_grid, Grid(64, 24.0))
        self.assertEqual(study.coarse_nc, self.profile.nc)
        self.assertLessEqual(abs(study.drift) / study.coarse_nc, 0.02)
        nc, error = estimate_nc(self.profile)
        self.assertEqual(nc, study.fine_nc)
        self.assertEqual(error, abs(study.drift))


if __name__ == "__main__":
    unittest.main()
