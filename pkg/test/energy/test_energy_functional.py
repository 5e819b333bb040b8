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

"""Test the energy functional"""

import unittest
from test import BosonStarTestCase

import numpy as np
from ddt import data, ddt

from boson_star.exceptions import DomainError
from boson_star.grid import ComplexField, Grid, ModelParams, inner
from boson_star.energy import (
    energy,
    energy_and_gradient,
    el_operator,
    gaussian_field,
    interaction_potential,
    interaction_quadruple,
    kinetic_form,
    lagrange_multiplier,
    random_field,
)
from boson_star.spectral import convolve_riesz, relativistic_multiplier, riesz_kernel


@ddt
class TestEnergyFunctional(BosonStarTestCase):
    """Energy functional tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(16, 10.0)
        rng = np.random.default_rng(3)
        noise = random_field(self.grid, rng, cutoff=1.0)
        self.phi = gaussian_field(self.grid, 1.2, target_n=1.0) + noise * 0.05
        self.params = ModelParams(alpha=0.5, beta=0.3, mass_m=1.0, constraint_n=1.0)

    @data(0.0, 0.3, -0.7)
    def test_breakdown_identity(self, beta):
        """Test the total is kinetic minus Coulomb plus beta times Riesz."""
        params = self.params.replace(beta=beta)
        result = energy(self.phi, params)
        self.assertAlmostEqual(
            result.total, result.kinetic - result.coulomb + beta * result.riesz_alpha, places=12
        )
        self.assertAlmostEqual(result.coulomb_quadruple, interaction_quadruple(self.phi, 1.0))
        self.assertAlmostEqual(result.riesz_quadruple, interaction_quadruple(self.phi, 0.5))
        self.assertAlmostEqual(result.massless_kinetic, kinetic_form(self.phi, 1.0))
        self.assertAlmostEqual(result.inv_kinetic, kinetic_form(self.phi, -1.0))

    def test_terms_positive(self):
        """Test every term of a nonzero field is positive."""
        result = energy(self.phi, self.params)
        self.assertGreater(result.kinetic, 0.0)
        self.assertGreater(result.coulomb, 0.0)
        self.assertGreater(result.riesz_alpha, 0.0)
        self.assertGreater(result.massless_kinetic, 0.0)
        self.assertGreater(result.inv_kinetic, 0.0)

    @data(0.3, 1.0, np.pi)
    def test_phase_invariance(self, theta):
        """Test the energy does not see a global phase."""
        rotated = self.phi * np.exp(1j * theta)
        self.assertAlmostEqual(
            energy(rotated, self.params).total, energy(self.phi, self.params).total, places=12
        )

    def test_kinetic_of_constant(self):
        """Test the constant field only has rest-mass kinetic energy."""
        field = ComplexField(self.grid, np.ones(self.grid.size))
        params = self.params.replace(mass_m=2.0)
        result = energy(field, params)
        self.assertAlmostEqual(result.kinetic / (0.5 * 2.0 * self.grid.volume), 1.0, places=12)
        self.assertAlmostEqual(result.massless_kinetic, 0.0, places=9)
        self.assertAlmostEqual(result.inv_kinetic, 0.0, places=9)

    @data((1, 0.0), (2, 0.3), (3, -0.2))
    def test_gradient_consistency(self, case):
        """Test H[phi] against a central finite difference of the energy."""
        seed, beta = case
        params = self.params.replace(beta=beta)
        direction = random_field(self.grid, np.random.default_rng(seed), cutoff=2.0)
        direction = direction * (1.0 / direction.norm())
        gradient = el_operator(self.phi, params)
        eps = 1e-5
        plus = energy(self.phi + direction * eps, params).total
        minus = energy(self.phi - direction * eps, params).total
        numeric = (plus - minus) / (2.0 * eps)
        analytic = inner(gradient, direction).real
        self.assertAlmostEqual(numeric, analytic, delta=1e-6 * max(1.0, abs(analytic)))

    def test_gradient_structure(self):
        """Test H[phi] is the kinetic part plus the potential times phi."""
        _, gradient = energy_and_gradient(self.phi, self.params)
        kinetic = relativistic_multiplier(self.grid, 1.0).apply(self.phi)
        potential = interaction_potential(self.phi, self.params)
        np.testing.assert_allclose(
            gradient.values, kinetic.values + potential * self.phi.values, atol=1e-10
        )

    def test_potential_riesz_part(self):
        """Test the Riesz part of the potential is beta times the Riesz convolution."""
        params = self.params.replace(beta=0.0)
        with_beta = interaction_potential(self.phi, self.params)
        without = interaction_potential(self.phi, params)
        kernel = riesz_kernel(self.grid, 0.5)
        riesz = convolve_riesz(kernel, self.phi.density()).values.real
        np.testing.assert_allclose(with_beta - without, 0.3 * riesz, atol=1e-10)

    @data(0.0, 0.3, -0.4)
    def test_multiplier_identity(self, beta):
        """Test the projection and the energy identity give the same multiplier."""
        params = self.params.replace(beta=beta)
        result = lagrange_multiplier(self.phi, params)
        self.assertAlmostEqual(result.projection, result.formula, places=10)
        self.assertAlmostEqual(result.discrepancy, 0.0, places=10)

    def test_multiplier_with_energy_override(self):
        """Test an explicit energy value enters the identity."""
        base = lagrange_multiplier(self.phi, self.params)
        shifted = lagrange_multiplier(
            self.phi, self.params, e_value=energy(self.phi, self.params).total + 0.5
        )
        self.assertAlmostEqual(shifted.formula - base.formula, 1.0 / self.phi.mass())
        self.assertAlmostEqual(shifted.projection, base.projection)

    def test_multiplier_zero_field(self):
        """Test the multiplier of the zero field."""
        with self.assertRaises(DomainError):
            lagrange_multiplier(ComplexField.zeros(self.grid), self.params)


if __name__ == "__main__":
    unittest.main()
