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

"""Ground states by projected gradient flow on the mass sphere."""

import logging
from typing import List, NamedTuple, Optional

import numpy as np
import pandas as pd

from ..energy import (
    EnergyBreakdown,
    LagrangeMultiplier,
    energy_and_gradient,
    lagrange_multiplier,
    rms_radius,
)
from ..exceptions import GridMismatchError
from ..grid import ComplexField, Grid, ModelParams, normalize
from .solver_algorithm import FlowRecord, SolverAlgorithm, SolverResult, SolverResultStatus
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)


class _FlowState(NamedTuple):
    field: ComplexField
    energy: EnergyBreakdown
    mu: float
    direction: np.ndarray
    residual: float


def _flow_state(field: ComplexField, params: ModelParams) -> _FlowState:
    breakdown, gradient = energy_and_gradient(field, params)
    weight = field.grid.weight
    field_mass = weight * float(np.vdot(field.values, field.values).real)
    mu = weight * float(np.vdot(field.values, gradient.values).real) / field_mass
    direction = gradient.values - mu * field.values
    residual = float(np.sqrt(weight * np.vdot(direction, direction).real / field_mass))
    return _FlowState(field, breakdown, mu, direction, residual)


class GroundStateResult(SolverResult):
    """Result of the ground-state minimization."""

    def __init__(
        self,
        field: ComplexField,
        energy: EnergyBreakdown,
        mu: LagrangeMultiplier,
        residual: float,
        iterations: int,
        status: SolverResultStatus,
        trace: List[FlowRecord],
        params: ModelParams,
    ) -> None:
        super().__init__(field, energy.total, status, trace)
        self._energy = energy
        self._mu = mu
        self._residual = residual
        self._iterations = iterations
        self._params = params

    @property
    def energy(self) -> EnergyBreakdown:
        """The energy breakdown at the final field."""
        return self._energy

    @property
    def mu(self) -> LagrangeMultiplier:
        """The Lagrange multiplier at the final field; ``mu.projection`` drives the flow."""
        return self._mu

    @property
    def residual(self) -> float:
        """``||H[phi] - mu phi|| / ||phi||`` at the final field."""
        return self._residual

    @property
    def iterations(self) -> int:
        """Flow iterations performed, rejected steps included."""
        return self._iterations

    @property
    def params(self) -> ModelParams:
        """The model parameters the field minimizes."""
        return self._params

    @property
    def converged(self) -> bool:
        """Whether the residual reached the tolerance."""
        return self.status == SolverResultStatus.SUCCESS

    def trace_frame(self) -> pd.DataFrame:
        """The accepted steps as a table with columns ``iter, energy, residual, dt``."""
        return pd.DataFrame(
            [(r.iteration, r.energy, r.residual, r.dt) for r in self.trace],
            columns=["iter", "energy", "residual", "dt"],
        )


class GradientFlowMinimizer(SolverAlgorithm):
    """Minimizes the energy at fixed mass by the normalized gradient flow

    ``phi <- normalize(phi - dt (H[phi] - mu phi), N)``

    with backtracking on the energy. A step is accepted only if it strictly lowers the energy,
    so the recorded energies never increase.
    """

    def solve(  # pylint: disable=arguments-differ
        self, params: ModelParams, grid: Grid, initial: Optional[ComplexField] = None
    ) -> GroundStateResult:
        """Runs the flow.

        Args:
            params: model parameters, ``constraint_n`` is the mass of the result.
            grid: the computational grid.
            initial: starting field; by default the configured initializer.

        Returns:
            The result. ``status`` is ``UNBOUNDED`` when the flow is detected collapsing,
            ``FAILURE`` when the iteration budget ran out or the step size collapsed.

        Raises:
            GridMismatchError: if ``initial`` lives on another grid.
        """
        config = self.config
        target = params.constraint_n
        if initial is None:
            initial = self.initial_guess(grid, target)
        elif initial.grid != grid:
            raise GridMismatchError(
                "Initial field on {} does not match solver grid {}".format(initial.grid, grid)
            )
        dt_start = config.step_size(grid, params.mass_m)
        dt = dt_start
        state = _flow_state(normalize(initial, target), params)
        kinetic_start = state.energy.massless_kinetic
        trace = [FlowRecord(0, state.energy.total, state.residual, dt)]
        logger.debug("ground-state flow: %s, dt0=%s", params, dt_start)

        status = SolverResultStatus.FAILURE
        iteration = 0
        while True:
            if state.residual <= config.residual_tol:
                status = SolverResultStatus.SUCCESS
                break
            if iteration >= config.max_iters:
                logger.warning(
                    "Ground-state flow hit max_iters=%d with residual %.3e",
                    config.max_iters,
                    state.residual,
                )
                break
            iteration += 1
            step = state.field.values - dt * state.direction
            trial_state = _flow_state(normalize(state.field.with_values(step), target), params)
            if trial_state.energy.total < state.energy.total:
                state = trial_state
                trace.append(FlowRecord(iteration, state.energy.total, state.residual, dt))
                dt = min(dt_start, dt / config.backtrack_factor)
                if self._unbounded(state, params, kinetic_start):
                    logger.info(
                        "Energy unbounded below at iteration %d (E=%.4g)",
                        iteration,
                        state.energy.total,
                    )
                    status = SolverResultStatus.UNBOUNDED
                    break
            else:
                dt *= config.backtrack_factor
                if dt < config.min_dt_ratio * dt_start:
                    logger.warning(
                        "Ground-state flow stagnated at iteration %d with residual %.3e",
                        iteration,
                        state.residual,
                    )
                    break
            if iteration % config.log_every == 0:
                logger.debug(
                    "iteration %d: E=%.12g residual=%.3e dt=%.3e",
                    iteration,
                    state.energy.total,
                    state.residual,
                    dt,
                )

        return GroundStateResult(
            field=state.field,
            energy=state.energy,
            mu=lagrange_multiplier(state.field, params),
            residual=state.residual,
            iterations=iteration,
            status=status,
            trace=trace,
            params=params,
        )

    def _unbounded(self, state: _FlowState, params: ModelParams, kinetic_start: float) -> bool:
        config = self.config
        total = state.energy.total
        floor = -config.energy_floor_factor * params.mass_m * params.constraint_n
        grown = state.energy.massless_kinetic >= config.kinetic_growth_factor * kinetic_start
        if total < floor and grown:
            return True
        # E >= 0 whenever N <= N_c and beta >= 0
        if params.beta >= 0 and total < 0:
            return True
        # on a finite grid the collapse saturates at the lattice scale
        if total < 0:
            return rms_radius(state.field) < config.collapse_cells * state.field.grid.spacing
        return False


def minimize(
    params: ModelParams,
    grid: Grid,
    config: Optional[SolverConfig] = None,
    initial: Optional[ComplexField] = None,
) -> GroundStateResult:
    """Minimize the energy at mass ``params.constraint_n`` on ``grid``.

    A convenience wrapper around :class:`GradientFlowMinimizer`.
    """
    result = GradientFlowMinimizer(config).solve(params, grid, initial)
    logger.info(
        "ground state %s: E=%.12g mu=%.12g (identity %.12g) residual=%.3e",
        result.status.name,
        result.fval,
        result.mu.projection,
        result.mu.formula,
        result.residual,
    )
    return result
