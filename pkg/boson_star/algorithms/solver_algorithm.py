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

"""Base classes for the ground-state solvers and their results."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, List, NamedTuple, Optional

import numpy as np

from ..energy import gaussian_field, random_field
from ..exceptions import GridMismatchError
from ..grid import ComplexField, Grid, load_field, normalize
from ..utils import spawn_generators
from .solver_config import SolverConfig


class SolverResultStatus(Enum):
    """Termination status of a solver."""

    SUCCESS = 0
    """the residual reached the configured tolerance."""

    FAILURE = 1
    """the iteration budget was exhausted or the step size collapsed."""

    UNBOUNDED = 2
    """the energy was detected to be unbounded below (collapse)."""


class FlowRecord(NamedTuple):
    """One accepted step of a descent flow."""

    iteration: int
    energy: float
    """objective value after the step: the energy, or the quotient for the optimizer ``Q``."""
    residual: float
    dt: float


class SolverResult:
    """A base class for solver results."""

    def __init__(
        self,
        field: ComplexField,
        fval: float,
        status: SolverResultStatus,
        trace: Optional[List[FlowRecord]] = None,
    ) -> None:
        """
        Args:
            field: the computed profile.
            fval: the objective value at ``field``.
            status: the termination status.
            trace: the accepted steps of the flow.
        """
        self._field = field
        self._fval = fval
        self._status = status
        self._trace = list(trace) if trace is not None else []

    def __repr__(self) -> str:
        return "{}(fval={:.10g}, status={})".format(
            type(self).__name__, self._fval, self._status.name
        )

    @property
    def field(self) -> ComplexField:
        """Returns the computed profile.

        Returns:
            The field the solver stopped at.
        """
        return self._field

    @property
    def fval(self) -> float:
        """Returns the objective value at the computed profile.

        Returns:
            The energy for ground states, the quotient value for the optimizer ``Q``.
        """
        return self._fval

    @property
    def status(self) -> SolverResultStatus:
        """Returns the termination status of the solver.

        Returns:
            The termination status.
        """
        return self._status

    @property
    def trace(self) -> List[FlowRecord]:
        """Returns the accepted steps of the flow, starting with the initial state.

        Returns:
            The list of flow records.
        """
        return self._trace


class SolverAlgorithm(ABC):
    """An abstract class for ground-state solvers."""

    def __init__(self, config: Optional[SolverConfig] = None) -> None:
        self._config = config if config is not None else SolverConfig()

    @property
    def config(self) -> SolverConfig:
        """Returns the solver configuration."""
        return self._config

    @config.setter
    def config(self, config: SolverConfig) -> None:
        """Sets the solver configuration."""
        self._config = config

    @abstractmethod
    def solve(self, *args: Any, **kwargs: Any) -> SolverResult:
        """Runs the solver.

        Returns:
            The result of the solver.
        """
        raise NotImplementedError

    def initial_guess(self, grid: Grid, target_n: float, trial: int = 0) -> ComplexField:
        """The starting field selected by the configuration.

        ``gaussian`` gives the centred real Gaussian of width ``gaussian_width``;
        ``loaded-field`` reads ``initial_field_path``. Trials after the first, or any trial when
        ``initial_noise`` is positive, modulate the start by seeded smooth noise.

        Raises:
            GridMismatchError: if a loaded field lives on another grid.
        """
        config = self._config
        if config.seed == "loaded-field":
            field, _ = load_field(config.initial_field_path)
            if field.grid != grid:
                raise GridMismatchError(
                    "Initial field on {} does not match solver grid {}".format(field.grid, grid)
                )
        else:
            field = gaussian_field(grid, config.gaussian_width)
        noise = config.initial_noise if trial == 0 else max(config.initial_noise, 0.1)
        if noise > 0:
            rng = spawn_generators(config.rng_seed, trial + 1)[trial]
            modulation = random_field(grid, rng, cutoff=2.0 / config.gaussian_width, real=True)
            modulation = modulation.values.real / np.max(np.abs(modulation.values))
            field = field.with_values(field.values * (1.0 + noise * modulation))
        return normalize(field, target_n)
