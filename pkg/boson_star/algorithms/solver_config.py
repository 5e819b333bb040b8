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

"""Parameters shared by the ground-state solvers."""

from typing import Optional

import numpy as np
from qiskit.utils.validation import (
    validate_in_set,
    validate_min,
    validate_min_exclusive,
    validate_range_exclusive,
)

from ..grid import Grid

SEEDS = {"gaussian", "loaded-field"}


class SolverConfig:
    """Defines a set of parameters for the gradient-flow solvers."""

    def __init__(
        self,
        max_iters: int = 20000,
        dt0: Optional[float] = None,
        residual_tol: float = 1.0e-6,
        backtrack_factor: float = 0.5,
        seed: str = "gaussian",
        gaussian_width: float = 1.0,
        initial_field_path: Optional[str] = None,
        energy_floor_factor: float = 10.0,
        kinetic_growth_factor: float = 100.0,
        collapse_cells: float = 1.5,
        min_dt_ratio: float = 1.0e-10,
        rng_seed: int = 0,
        initial_noise: float = 0.0,
        trials: int = 1,
        rescale_rounds: int = 4,
        scale_tol: float = 1.0e-4,
        box_study: bool = True,
        log_every: int = 500,
    ) -> None:
        """Defines parameters for the solvers and their default values.

        Args:
            max_iters: Maximum number of flow iterations (accepted or rejected steps).
            dt0: Initial step. ``None`` selects ``0.5 / sqrt(xi_max**2 + m**2)`` for the energy
                flow and the analogous bound of the quotient flow.
            residual_tol: Target for the relative Euler-Lagrange residual.
            backtrack_factor: Step reduction after a rejected step; accepted steps grow the
                step back by its inverse, up to ``dt0``.
            seed: Initializer, ``"gaussian"`` or ``"loaded-field"``.
            gaussian_width: Width of the Gaussian initializer.
            initial_field_path: QFLD file read by the ``"loaded-field"`` initializer.
            energy_floor_factor: The unbounded-below detector fires when the energy drops
                below ``-energy_floor_factor * m * N`` while the massless kinetic term grew by
                ``kinetic_growth_factor``.
            kinetic_growth_factor: See ``energy_floor_factor``.
            collapse_cells: The detector also fires when the energy is negative and the rms
                radius of the density falls below this many grid spacings.
            min_dt_ratio: The flow gives up when the step falls below ``min_dt_ratio * dt0``.
            rng_seed: Seed of the noise used by perturbed initializers.
            initial_noise: Relative amplitude of smooth noise applied to the first trial.
            trials: Number of multi-start trials of the optimizer search.
            rescale_rounds: Maximum rescale-and-polish rounds of the optimizer search.
            scale_tol: Rescaling stops once the dilation factor is within this of one.
            box_study: Repeat the optimizer search on the doubled box.
            log_every: Iterations between debug log lines.

        Raises:
            ValueError: if a parameter is out of range.
        """
        validate_min("max_iters", max_iters, 1)
        if dt0 is not None:
            validate_min_exclusive("dt0", dt0, 0.0)
        validate_min_exclusive("residual_tol", residual_tol, 0.0)
        validate_range_exclusive("backtrack_factor", backtrack_factor, 0.0, 1.0)
        validate_in_set("seed", seed, SEEDS)
        if seed == "loaded-field" and not initial_field_path:
            raise ValueError("The loaded-field initializer needs initial_field_path")
        validate_min_exclusive("gaussian_width", gaussian_width, 0.0)
        validate_min("energy_floor_factor", energy_floor_factor, 0.0)
        validate_min("kinetic_growth_factor", kinetic_growth_factor, 1.0)
        validate_min("collapse_cells", collapse_cells, 0.0)
        validate_range_exclusive("min_dt_ratio", min_dt_ratio, 0.0, 1.0)
        validate_min("initial_noise", initial_noise, 0.0)
        validate_min("trials", trials, 1)
        validate_min("rescale_rounds", rescale_rounds, 1)
        validate_min_exclusive("scale_tol", scale_tol, 0.0)
        validate_min("log_every", log_every, 1)
        self.max_iters = int(max_iters)
        self.dt0 = dt0
        self.residual_tol = residual_tol
        self.backtrack_factor = backtrack_factor
        self.seed = seed
        self.gaussian_width = gaussian_width
        self.initial_field_path = initial_field_path
        self.energy_floor_factor = energy_floor_factor
        self.kinetic_growth_factor = kinetic_growth_factor
        self.collapse_cells = collapse_cells
        self.min_dt_ratio = min_dt_ratio
        self.rng_seed = int(rng_seed)
        self.initial_noise = initial_noise
        self.trials = int(trials)
        self.rescale_rounds = int(rescale_rounds)
        self.scale_tol = scale_tol
        self.box_study = box_study
        self.log_every = int(log_every)

    def step_size(self, grid: Grid, m: float) -> float:
        """The initial step of the energy flow on ``grid``."""
        if self.dt0 is not None:
            return self.dt0
        return float(0.5 / np.sqrt(grid.xi_max ** 2 + m ** 2))

    def __repr__(self) -> str:
        props = ", ".join(["{}={}".format(key, value) for (key, value) in vars(self).items()])
        return "{0}({1})".format(type(self).__name__, props)
