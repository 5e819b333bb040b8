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

"""
Code inside the test is the ground-state sample from the readme.
If this test fails and code changes are needed here to resolve
the issue then ensure changes are made to readme too.
"""

import unittest
from test import BosonStarTestCase

import numpy as np

# pylint: disable=import-outside-toplevel,redefined-builtin


class TestReadmeSample(BosonStarTestCase):
    """Test sample code from readme"""

    def _sample_code(self):
        def print(*args):
            """overloads print to log values"""
            if args:
                self.log.debug(" ".join(str(arg) for arg in args))

        # --- Exact copy of sample code ----------------------------------------

        from boson_star import Grid, ModelParams
        from boson_star.algorithms import SolverConfig, minimize

        grid = Grid(16, 12.0)
        params = ModelParams(alpha=0.5, beta=0.3, mass_m=1.0, constraint_n=1.0)
        config = SolverConfig(max_iters=300, residual_tol=1e-3)

        result = minimize(params, grid, config)
        print(result.status.name, result.energy.total, result.mu.projection)
        # ----------------------------------------------------------------------

        return result

    def test_readme_sample(self):
        """readme sample test"""
        result = self._sample_code()
        self.assertAlmostEqual(result.field.mass(), 1.0, places=8)
        self.assertTrue(np.isfinite(result.energy.total))
        self.assertGreater(result.energy.total, 0.0)


if __name__ == "__main__":
    unittest.main()
