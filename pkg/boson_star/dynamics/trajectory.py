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

"""Time evolution with conservation monitors and the blow-up indicator."""

import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from qiskit.utils.validation import validate_min, validate_min_exclusive

from ..energy import EnergyBreakdown, energy, kinetic_form
from ..exceptions import DomainError, IntegratorError
from ..grid import ComplexField, ModelParams, mass, save_field
from .modulation import modulated_distance
from .strang_integrator import StrangIntegrator

logger = logging.getLogger(__name__)


class TrajectoryVerdict(Enum):
    """Outcome of the blow-up indicator."""

    COMPLETED = "completed"
    BLOWUP_INDICATED = "blowup-indicated"


class MonitorConfig:
    """Defines the sampling and snapshot parameters of :func:`evolve`."""

    def __init__(
        self,
        sample_every: int = 10,
        snapshot_every: int = 0,
        snapshot_dir: Optional[str] = None,
        growth_factor: float = 5.0,
        phase_guard: bool = True,
    ) -> None:
        """
        Args:
            sample_every: Steps between diagnostic samples; ``t = 0`` and the final time are
                always sampled.
            snapshot_every: Steps between QFLD snapshots, 0 for none.
            snapshot_dir: Directory of snapshots and of the last good state on failure.
            growth_factor: Growth of the massless kinetic term the blow-up indicator requires.
            phase_guard: Reject steps with ``dt sqrt(xi_max**2 + m**2) > pi``.

        Raises:
            ValueError: if a parameter is out of range.
        """
        validate_min("sample_every", sample_every, 1)
        validate_min("snapshot_every", snapshot_every, 0)
        validate_min_exclusive("growth_factor", growth_factor, 1.0)
        if snapshot_every > 0 and not snapshot_dir:
            raise ValueError("snapshot_every > 0 needs a snapshot_dir")
        self.sample_every = int(sample_every)
        self.snapshot_every = int(snapshot_every)
        self.snapshot_dir = snapshot_dir
        self.growth_factor = growth_factor
        self.phase_guard = phase_guard

    def __repr__(self) -> str:
        props = ", ".join(["{}={}".format(key, value) for (key, value) in vars(self).items()])
        return "{0}({1})".format(type(self).__name__, props)


@dataclass
class TrajectoryDiagnostics:
    """Samples of the conserved quantities along a trajectory.

    Attributes:
        times: sample instants.
        mass_series: mass at each sample.
        energy_series: energy breakdown at each sample.
        kinetic_series: ``<psi, sqrt(-Laplacian) psi>`` at each sample.
        mod_distance_series: modulated distance to the reference, empty without one.
        verdict: outcome of :func:`blowup_indicator`.
        final_state: the field at the final time.
    """

    times: List[float] = field(default_factory=list)
    mass_series: List[float] = field(default_factory=list)
    energy_series: List[EnergyBreakdown] = field(default_factory=list)
    kinetic_series: List[float] = field(default_factory=list)
    mod_distance_series: List[float] = field(default_factory=list)
    verdict: TrajectoryVerdict = TrajectoryVerdict.COMPLETED
    final_state: Optional[ComplexField] = None

    @property
    def max_mass_deviation(self) -> float:
        """The largest ``|mass(t) - mass(0)| / mass(0)`` over the samples."""
        if not self.mass_series:
            return 0.0
        series = np.asarray(self.mass_series)
        return float(np.max(np.abs(series - series[0])) / series[0])

    @property
    def energy_drift(self) -> float:
        """``|E(t_final) - E(0)|``."""
        if not self.energy_series:
            return 0.0
        return abs(self.energy_series[-1].total - self.energy_series[0].total)

    def to_frame(self) -> pd.DataFrame:
        """The samples as a table in the diagnostics CSV layout."""
        distances = self.mod_distance_series or [np.nan] * len(self.times)
        flag = int(self.verdict == TrajectoryVerdict.BLOWUP_INDICATED)
        return pd.DataFrame(
            {
                "t": self.times,
                "mass": self.mass_series,
                "E_total": [e.total for e in self.energy_series],
                "E_kinetic_half": [e.kinetic for e in self.energy_series],
                "E_coulomb": [e.coulomb for e in self.energy_series],
                "E_riesz": [e.riesz_alpha for e in self.energy_series],
                "kinetic_massless": self.kinetic_series,
                "mod_distance": distances,
                "verdict_flag": [flag] * len(self.times),
            }
        )


def blowup_indicator(
    diagnostics: Union[TrajectoryDiagnostics, Sequence[float]], growth_factor: float = 5.0
) -> TrajectoryVerdict:
    """A heuristic blow-up verdict from the massless kinetic series.

    Blow-up is indicated when the series increases strictly over its last quartile (at least
    two samples) and its last value exceeds ``growth_factor`` times its first.
    """
    if isinstance(diagnostics, TrajectoryDiagnostics):
        series = np.asarray(diagnostics.kinetic_series, dtype=float)
    else:
        series = np.asarray(diagnostics, dtype=float)
    count = len(series)
    if count < 2:
        return TrajectoryVerdict.COMPLETED
    tail = series[min(3 * count // 4, count - 2) :]
    if np.all(np.diff(tail) > 0) and series[-1] > growth_factor * series[0]:
        return TrajectoryVerdict.BLOWUP_INDICATED
    return TrajectoryVerdict.COMPLETED


def _step_count(t_max: float, dt: float) -> int:
    if t_max <= 0 or dt <= 0:
        raise DomainError("evolve needs t_max > 0 and dt > 0, got {} and {}".format(t_max, dt))
    steps = int(round(t_max / dt))
    if steps < 1 or abs(steps * dt - t_max) > 1e-9 * t_max:
        raise DomainError("t_max={} is not an integer multiple of dt={}".format(t_max, dt))
    return steps


def evolve(
    psi0: ComplexField,
    params: ModelParams,
    t_max: float,
    dt: float,
    monitor: Optional[MonitorConfig] = None,
    reference: Optional[ComplexField] = None,
) -> TrajectoryDiagnostics:
    """Evolve ``psi0`` to ``t_max`` with Strang steps of size ``dt``.

    Args:
        psi0: initial datum.
        params: model parameters; ``constraint_n`` is not used.
        t_max: final time, an integer multiple of ``dt``.
        dt: step size.
        monitor: sampling and snapshot parameters.
        reference: profile whose modulated distance is sampled along the trajectory.

    Returns:
        The sampled diagnostics, the verdict and the final state.

    Raises:
        DomainError: if the step count is not an integer or ``dt`` violates the phase guard.
        IntegratorError: if a step produced non-finite values; the last good state is written
            to the snapshot directory when one is configured.
    """
    monitor = monitor if monitor is not None else MonitorConfig()
    grid = psi0.grid
    steps = _step_count(t_max, dt)
    phase = dt * np.sqrt(grid.xi_max ** 2 + params.mass_m ** 2)
    if monitor.phase_guard and phase > np.pi:
        raise DomainError(
            "dt={} rotates the fastest mode by {:.3f} > pi; reduce dt".format(dt, phase)
        )
    integrator = StrangIntegrator(params, grid)
    diagnostics = TrajectoryDiagnostics()

    def record(time: float, state: ComplexField) -> None:
        diagnostics.times.append(time)
        diagnostics.mass_series.append(mass(state))
        diagnostics.energy_series.append(energy(state, params))
        diagnostics.kinetic_series.append(kinetic_form(state, 1.0))
        if reference is not None:
            diagnostics.mod_distance_series.append(modulated_distance(state, reference))

    psi = psi0
    record(0.0, psi)
    for step in range(1, steps + 1):
        try:
            psi = integrator.step(psi, dt)
        except IntegratorError as error:
            error.time = (step - 1) * dt
            if monitor.snapshot_dir:
                path = os.path.join(monitor.snapshot_dir, "last_good.qfld")
                save_field(error.last_state, params, path)
                logger.error("Integration failed at t=%s; last good state in %s", error.time, path)
            raise
        if step % monitor.sample_every == 0 or step == steps:
            record(step * dt, psi)
        if monitor.snapshot_every and step % monitor.snapshot_every == 0:
            path = os.path.join(monitor.snapshot_dir, "snapshot_{:06d}.qfld".format(step))
            save_field(psi, params, path)

    diagnostics.verdict = blowup_indicator(diagnostics, monitor.growth_factor)
    diagnostics.final_state = psi
    logger.info(
        "evolved %d steps to t=%s: %s, mass deviation %.3e, energy drift %.3e",
        steps,
        t_max,
        diagnostics.verdict.value,
        diagnostics.max_mass_deviation,
        diagnostics.energy_drift,
    )
    return diagnostics
