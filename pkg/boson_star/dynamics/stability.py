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

"""Orbital stability experiment: perturb a ground state, evolve, track the modulated distance."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from qiskit.utils.validation import validate_min, validate_min_exclusive

from ..energy import random_field
from ..grid import ComplexField, ModelParams, mass, normalize
from ..spectral import sobolev_norm
from ..utils import make_rng
from .trajectory import MonitorConfig, TrajectoryDiagnostics, evolve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of :func:`stability_experiment`.

    Attributes:
        initial_scale: ``||phi||_{H^{1/2}}`` of the unperturbed ground state.
        bound: the admissible modulated distance, ``tolerance_factor * delta * initial_scale``.
        max_distance: the largest sampled modulated distance.
        stable: whether ``max_distance <= bound``.
        diagnostics: the sampled trajectory.
    """

    initial_scale: float
    bound: float
    max_distance: float
    stable: bool
    diagnostics: TrajectoryDiagnostics


def perturb_ground_state(
    phi: ComplexField, delta: float, nc_limit: float, rng: np.random.Generator
) -> ComplexField:
    """``phi + delta ||phi|| h / ||h||`` for a seeded band-limited ``h``, with its mass
    projected down to at most ``nc_limit``."""
    validate_min("delta", delta, 0.0)
    validate_min_exclusive("nc_limit", nc_limit, 0.0)
    grid = phi.grid
    noise = random_field(grid, rng, cutoff=0.25 * grid.xi_max)
    perturbed = phi + noise * (delta * phi.norm() / noise.norm())
    return normalize(perturbed, min(mass(perturbed), nc_limit))


def stability_experiment(
    phi: ComplexField,
    params: ModelParams,
    delta: float,
    t_max: float,
    dt: float,
    nc_limit: float,
    rng_seed: int = 0,
    monitor: Optional[MonitorConfig] = None,
    tolerance_factor: float = 10.0,
) -> StabilityReport:
    """Evolve a perturbed ground state and compare its distance to the orbit of ``phi``.

    Args:
        phi: the ground state, also the reference of the modulated distance.
        params: model parameters.
        delta: relative size of the perturbation.
        t_max: final time.
        dt: step size.
        nc_limit: upper bound on the mass of the perturbed datum.
        rng_seed: seed of the perturbation.
        monitor: sampling parameters.
        tolerance_factor: the verdict compares against ``tolerance_factor * delta`` times the
            ``H^{1/2}`` norm of ``phi``.

    Returns:
        The stability report.
    """
    psi0 = perturb_ground_state(phi, delta, nc_limit, make_rng(rng_seed))
    scale = sobolev_norm(phi, 0.5)
    diagnostics = evolve(psi0, params, t_max, dt, monitor, reference=phi)
    max_distance = float(np.max(diagnostics.mod_distance_series))
    bound = tolerance_factor * delta * scale
    report = StabilityReport(scale, bound, max_distance, max_distance <= bound, diagnostics)
    logger.info(
        "stability: max distance %.4g, bound %.4g (%s)",
        max_distance,
        bound,
        "stable" if report.stable else "unstable",
    )
    return report
