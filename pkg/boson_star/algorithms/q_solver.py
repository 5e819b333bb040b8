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

"""The optimizer ``Q`` of the Gagliardo-Nirenberg quotient and the critical mass ``N_c``.

The quotient ``J = <psi, sqrt(-Laplacian) psi> <psi, psi> / int (|x|**-1 * rho) rho`` is
invariant under amplitude scaling and dilation. Its minimizer is found by a descent flow
restricted to the complement of that orbit and then brought into the normalization
``M = K = C / 2`` by a closed-form rescale, which makes ``Q`` solve
``sqrt(-Laplacian) Q - (|x|**-1 * Q**2) Q = -Q`` and ``mass(Q) = N_c = 2 min J``.
"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy import fft

from ..energy import (
    PohozaevReport,
    check_resolution,
    dilate,
    el_operator,
    gn_ratio,
    pohozaev_report,
    recenter,
    remove_global_phase,
)
from ..exceptions import ConvergenceError, DomainError
from ..grid import ComplexField, Grid, ModelParams, mass
from ..spectral import convolve_values, riesz_kernel, spectral_quadratic_form
from .multistart_solver import MultiStartSolver
from .solver_algorithm import FlowRecord, SolverResult, SolverResultStatus
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoxStudy:
    """``N_c`` measured on a grid and on the doubled box at the same spacing."""

    coarse_grid: Grid
    fine_grid: Grid
    coarse_nc: float
    fine_nc: float

    @property
    def drift(self) -> float:
        """``fine_nc - coarse_nc``."""
        return self.fine_nc - self.coarse_nc


class QProfile(SolverResult):
    """The computed optimizer ``Q``: real, positive and centred in the box."""

    def __init__(
        self,
        field: ComplexField,
        pohozaev: PohozaevReport,
        gn_value: float,
        residual: float,
        status: SolverResultStatus = SolverResultStatus.SUCCESS,
        trace: Optional[List[FlowRecord]] = None,
        box_study: Optional[BoxStudy] = None,
    ) -> None:
        super().__init__(field, gn_value, status, trace)
        self._pohozaev = pohozaev
        self._residual = residual
        self._box_study = box_study

    @classmethod
    def from_field(
        cls, field: ComplexField, status: SolverResultStatus = SolverResultStatus.SUCCESS
    ) -> "QProfile":
        """Wrap a stored or externally computed profile, evaluating its diagnostics."""
        return cls(field, pohozaev_report(field), gn_ratio(field), _q_residual(field), status)

    @property
    def nc(self) -> float:
        """The critical mass estimate ``mass(Q)``."""
        return mass(self.field)

    @property
    def grid(self) -> Grid:
        """The grid ``Q`` lives on."""
        return self.field.grid

    @property
    def pohozaev(self) -> PohozaevReport:
        """The Pohozaev ratios of ``Q``."""
        return self._pohozaev

    @property
    def gn_value(self) -> float:
        """The quotient ``J(Q)``, half of ``N_c`` for an exact optimizer."""
        return self.fval

    @property
    def residual(self) -> float:
        """``||sqrt(-Laplacian) Q - (|x|**-1 * Q**2) Q + Q|| / ||Q||``."""
        return self._residual

    @property
    def box_study(self) -> Optional[BoxStudy]:
        """The doubled-box repetition, if one was run."""
        return self._box_study

    def with_box_study(self, box_study: BoxStudy) -> "QProfile":
        """A copy carrying ``box_study``."""
        return QProfile(
            self.field,
            self._pohozaev,
            self.fval,
            self._residual,
            self.status,
            self.trace,
            box_study,
        )

    def params(self, alpha: float) -> ModelParams:
        """Parameters recorded with ``Q`` on disk: ``beta = m = 0`` and ``N = N_c``."""
        return ModelParams(alpha, 0.0, 0.0, self.nc)


def _q_residual(field: ComplexField) -> float:
    # multiplier -1; alpha is irrelevant at beta = 0
    params = ModelParams(0.5, 0.0, 0.0, mass(field))
    defect = el_operator(field, params) + field
    return defect.norm() / field.norm()


class _QuotientState(NamedTuple):
    values: np.ndarray
    quotient: float
    direction: np.ndarray
    residual: float
    field_mass: float
    kinetic: float
    coulomb: float


def _dilation_generator(values_hat: np.ndarray, grid: Grid) -> np.ndarray:
    """``x . grad psi`` by spectral differentiation; the Nyquist mode is dropped."""
    xi = grid.frequencies()
    xi[grid.n // 2] = 0.0
    x = grid.coordinates()
    result = np.zeros(grid.shape, dtype=complex)
    for axis in range(3):
        shape = [1, 1, 1]
        shape[axis] = grid.n
        derivative = fft.ifftn(1j * xi.reshape(shape) * values_hat)
        result += x.reshape(shape) * derivative
    return result


def _project_out(vector: np.ndarray, generators: Sequence[np.ndarray]) -> np.ndarray:
    """Remove the span of ``generators`` from ``vector`` in the real inner product."""
    basis: List[np.ndarray] = []
    for generator in generators:
        for unit in basis:
            generator = generator - np.vdot(unit, generator).real * unit
        norm = np.sqrt(np.vdot(generator, generator).real)
        if norm > 0:
            basis.append(generator / norm)
    for unit in basis:
        vector = vector - np.vdot(unit, vector).real * unit
    return vector


def _quotient_state(values: np.ndarray, grid: Grid) -> _QuotientState:
    weight = grid.weight
    values_hat = fft.fftn(values)
    xi = np.sqrt(grid.xi_squared())
    kinetic = spectral_quadratic_form(xi, values_hat, grid)
    field_mass = weight * float(np.vdot(values, values).real)
    rho = values.real ** 2 + values.imag ** 2
    potential = convolve_values(riesz_kernel(grid, 1.0).multiplier.values, fft.fftn(rho))
    coulomb = weight * float(np.sum(potential * rho))
    if kinetic <= 0 or coulomb <= 0:
        raise DomainError("The quotient is undefined for a constant or zero field")
    # half the mass times the gradient of log J
    direction = (
        (field_mass / kinetic) * fft.ifftn(xi * values_hat)
        + values
        - (2.0 * field_mass / coulomb) * potential * values
    )
    direction = _project_out(direction, [values, _dilation_generator(values_hat, grid)])
    residual = float(np.sqrt(np.vdot(direction, direction).real / np.vdot(values, values).real))
    return _QuotientState(
        values, kinetic * field_mass / coulomb, direction, residual, field_mass, kinetic, coulomb
    )


def _embed(field: ComplexField, grid: Grid) -> ComplexField:
    """Zero-pad ``field`` into the centre of a larger box with the same spacing."""
    small = field.grid.n
    start = (grid.n - small) // 2
    values = np.zeros(grid.shape, dtype=complex)
    window = slice(start, start + small)
    values[window, window, window] = field.values
    return ComplexField(grid, values)


class QSolver(MultiStartSolver):
    """Computes the optimizer ``Q`` and the critical mass ``N_c``.

    The search runs in three stages: the quotient flow, repeated closed-form rescaling with
    short polishing flows, and normalization (centring, phase removal, exact amplitude).
    With ``config.box_study`` the search is repeated on the doubled box to bound the finite-box
    error of ``N_c``.
    """

    def solve(self, grid: Grid) -> QProfile:  # pylint: disable=arguments-differ
        """Runs the search.

        Args:
            grid: the computational grid.

        Returns:
            The profile on ``grid``, with a :class:`BoxStudy` when requested.

        Raises:
            ConvergenceError: if the quotient flow stalls.
            ResolutionError: if a rescaled profile leaves the resolved range.
        """
        profile = self.multi_start_solve(
            lambda start: self._solve_on_grid(grid, start),
            lambda trial: self.initial_guess(grid, 1.0, trial),
        )
        if not self.config.box_study:
            return profile
        fine_grid = grid.doubled()
        logger.info("box study on %s", fine_grid)
        fine = self._solve_on_grid(fine_grid, _embed(profile.field, fine_grid))
        study = BoxStudy(grid, fine_grid, profile.nc, fine.nc)
        logger.info(
            "N_c: %.10g on %s, %.10g on %s", study.coarse_nc, grid, study.fine_nc, fine_grid
        )
        return profile.with_box_study(study)

    def _solve_on_grid(self, grid: Grid, start: ComplexField) -> QProfile:
        config = self.config
        psi, trace, converged = self._quotient_flow(start)

        for _ in range(config.rescale_rounds):
            state = _quotient_state(psi.values, grid)
            scale = state.field_mass / state.kinetic
            if abs(scale - 1.0) <= config.scale_tol:
                break
            psi = dilate(psi, scale)
            check_resolution(psi)
            psi, polish, converged = self._quotient_flow(psi, offset=trace[-1].iteration)
            trace.extend(polish[1:])
        else:
            state = _quotient_state(psi.values, grid)
            logger.warning(
                "Rescaling stopped after %d rounds at scale %.3e from one",
                config.rescale_rounds,
                state.field_mass / state.kinetic - 1.0,
            )

        psi = remove_global_phase(recenter(psi))
        psi = psi.with_values(np.abs(psi.values.real))
        state = _quotient_state(psi.values, grid)
        psi = psi * np.sqrt(2.0 * state.field_mass / state.coulomb)
        check_resolution(psi)

        status = SolverResultStatus.SUCCESS if converged else SolverResultStatus.FAILURE
        profile = QProfile(
            psi, pohozaev_report(psi), gn_ratio(psi), _q_residual(psi), status, trace
        )
        logger.info(
            "Q on %s: N_c=%.10g J=%.10g residual=%.3e (%s)",
            grid,
            profile.nc,
            profile.gn_value,
            profile.residual,
            status.name,
        )
        return profile

    def _quotient_flow(
        self, start: ComplexField, offset: int = 0
    ) -> Tuple[ComplexField, List[FlowRecord], bool]:
        """Descend ``J`` at fixed amplitude from ``start``.

        Returns:
            The final field, the accepted steps and whether the residual reached the tolerance.

        Raises:
            ConvergenceError: if the step size collapses.
        """
        config = self.config
        grid = start.grid
        amplitude = mass(start)
        state = _quotient_state(start.values, grid)
        if config.dt0 is not None:
            dt_start = config.dt0
        else:
            dt_start = 0.5 / (state.field_mass / state.kinetic * grid.xi_max + 1.0)
        dt = dt_start
        trace = [FlowRecord(offset, state.quotient, state.residual, dt)]

        iteration = 0
        while state.residual > config.residual_tol:
            if iteration >= config.max_iters:
                logger.warning(
                    "Quotient flow hit max_iters=%d with residual %.3e",
                    config.max_iters,
                    state.residual,
                )
                return ComplexField(grid, state.values), trace, False
            iteration += 1
            step = state.values - dt * state.direction
            step = step * np.sqrt(amplitude / (grid.weight * np.vdot(step, step).real))
            trial = _quotient_state(step, grid)
            if trial.quotient < state.quotient:
                state = trial
                trace.append(FlowRecord(offset + iteration, state.quotient, state.residual, dt))
                dt = min(dt_start, dt / config.backtrack_factor)
            else:
                dt *= config.backtrack_factor
                if dt < config.min_dt_ratio * dt_start:
                    raise ConvergenceError(
                        "Quotient flow stalled at iteration {} with residual {:.3e}".format(
                            offset + iteration, state.residual
                        ),
                        trace,
                    )
            if iteration % config.log_every == 0:
                logger.debug(
                    "iteration %d: J=%.12g residual=%.3e dt=%.3e",
                    offset + iteration,
                    state.quotient,
                    state.residual,
                    dt,
                )
        return ComplexField(grid, state.values), trace, True


def compute_q(grid: Grid, config: Optional[SolverConfig] = None) -> QProfile:
    """Compute the optimizer ``Q`` on ``grid``; see :class:`QSolver`."""
    return QSolver(config).solve(grid)


def estimate_nc(q: QProfile) -> Tuple[float, float]:
    """The critical mass and its finite-box error bar.

    Returns:
        ``(N_c on the doubled box, |drift|)``, or ``(mass(Q), nan)`` when ``q`` carries no box
        study.
    """
    if q.box_study is None:
        logger.warning("No box study available; the N_c error bar is unknown")
        return q.nc, float("nan")
    return q.box_study.fine_nc, abs(q.box_study.drift)
