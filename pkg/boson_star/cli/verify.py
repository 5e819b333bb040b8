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

"""Self-checks of the numerical building blocks against independent evaluations."""

import logging
from typing import Callable, List, NamedTuple, Tuple

import numpy as np

from ..algorithms import QProfile
from ..asymptotics import ScanRow, fit_exponent, limit_constant, limit_constant_variational
from ..dynamics import StrangIntegrator
from ..energy import el_operator, energy, gaussian_field, lagrange_multiplier, random_field
from ..exceptions import BosonStarError
from ..grid import ComplexField, Grid, ModelParams, inner, mass, normalize
from ..spectral import (
    convolve_riesz,
    direct_convolution_oracle,
    fractional_multiplier,
    relativistic_multiplier,
    riesz,
    riesz_kernel,
)
from ..utils import make_rng

logger = logging.getLogger(__name__)

ORACLE_GRID = Grid(8, 6.0)
CHECK_GRID = Grid(8, 8.0)
CHECK_PARAMS = ModelParams(alpha=0.5, beta=0.3, mass_m=1.0, constraint_n=1.0)


class CheckResult(NamedTuple):
    """The outcome of one check."""

    name: str
    passed: bool
    measured: float
    bound: float

    def to_line(self) -> str:
        """The ``name,status,measured,bound`` line."""
        status = "PASS" if self.passed else "FAIL"
        return "{},{},{:.3e},{:.1e}".format(self.name, status, self.measured, self.bound)


def _test_field(seed: int) -> ComplexField:
    rng = make_rng(seed)
    bump = gaussian_field(CHECK_GRID, 1.5)
    noise = random_field(CHECK_GRID, rng, cutoff=2.0)
    return normalize(bump + noise * (0.1 * bump.norm() / noise.norm()), 1.0)


def _oracle_error(theta: float) -> float:
    density = make_rng(11).random(ORACLE_GRID.shape)
    fast = convolve_riesz(riesz_kernel(ORACLE_GRID, theta), density).values.real
    direct = direct_convolution_oracle(theta, density, ORACLE_GRID).values.real
    return float(np.max(np.abs(fast - direct)) / np.max(np.abs(direct)))


def _kernel_constant_error() -> float:
    return abs(riesz.riesz_constant(1.0) - 4.0 * np.pi) / (4.0 * np.pi)


def _gradient_error() -> float:
    phi = _test_field(1)
    direction = _test_field(2)
    eps = 1.0e-5
    forward = energy(phi + direction * eps, CHECK_PARAMS).total
    backward = energy(phi - direction * eps, CHECK_PARAMS).total
    finite_difference = (forward - backward) / (2.0 * eps)
    analytic = inner(el_operator(phi, CHECK_PARAMS), direction).real
    return abs(finite_difference - analytic) / abs(analytic)


def _plane_wave_error() -> float:
    grid = CHECK_GRID
    wavevector = 2.0 * np.pi / grid.length * np.array([1.0, 2.0, 0.0])
    x, y, z = grid.mesh()
    phase = wavevector[0] * x + wavevector[1] * y + wavevector[2] * z
    wave = ComplexField(grid, np.exp(1j * phase))
    dt = 0.1
    omega = np.sqrt(np.sum(wavevector ** 2) + CHECK_PARAMS.mass_m ** 2)
    stepped = StrangIntegrator(CHECK_PARAMS, grid, interaction=False).step(wave, dt)
    return float(np.max(np.abs(stepped.values - np.exp(-1j * dt * omega) * wave.values)))


def _self_adjointness_error() -> float:
    f = _test_field(3)
    g = _test_field(4)
    worst = 0.0
    for mult in (relativistic_multiplier(CHECK_GRID, 1.0), fractional_multiplier(CHECK_GRID, 1.0)):
        af, ag = mult.apply(f), mult.apply(g)
        defect = abs(inner(f, ag) - inner(af, g)) / (f.norm() * ag.norm())
        worst = max(worst, defect)
    return worst


def _breakdown_error() -> float:
    phi = _test_field(5)
    parts = energy(phi, CHECK_PARAMS)
    recombined = parts.kinetic - parts.coulomb + CHECK_PARAMS.beta * parts.riesz_alpha
    total_defect = abs(parts.total - recombined) / abs(parts.total)
    mu = lagrange_multiplier(phi, CHECK_PARAMS)
    return max(total_defect, mu.discrepancy / abs(mu.projection))


def _strang_mass_error() -> float:
    psi = _test_field(6)
    integrator = StrangIntegrator(CHECK_PARAMS, CHECK_GRID)
    start = mass(psi)
    worst = 0.0
    for _ in range(5):
        psi = integrator.step(psi, 0.05)
        worst = max(worst, abs(mass(psi) - start) / start)
    return worst


def _strang_reversibility_error() -> float:
    psi = _test_field(7)
    integrator = StrangIntegrator(CHECK_PARAMS, CHECK_GRID, interaction=False)
    back = integrator.step(integrator.step(psi, 0.05), -0.05)
    return (back - psi).norm() / psi.norm()


def _fit_error() -> float:
    exponent = 2.0 / 3.0
    rows = [
        ScanRow(beta, 1.7 * beta ** exponent, 1.0, 1.0, 1.0, -1.0, 0.0, 8, 1.0, True, 0.0)
        for beta in (0.2, 0.1, 0.05, 0.025, 0.0125)
    ]
    return abs(fit_exponent(rows, "energy").exponent - exponent)


def _limit_constant_error() -> float:
    q = QProfile.from_field(gaussian_field(Grid(16, 12.0), 1.5))
    closed = limit_constant(q, 0.5, 1.0)
    return abs(limit_constant_variational(q, 0.5, 1.0) - closed) / closed


CHECKS: List[Tuple[str, Callable[[], float], float]] = [
    ("convolution_oracle[theta=0.5]", lambda: _oracle_error(0.5), 1.0e-10),
    ("convolution_oracle[theta=1.0]", lambda: _oracle_error(1.0), 1.0e-10),
    ("convolution_oracle[kernel_constant]", _kernel_constant_error, 1.0e-12),
    ("gradient_consistency", _gradient_error, 1.0e-6),
    ("plane_wave_eigenrelation", _plane_wave_error, 1.0e-12),
    ("multiplier_self_adjointness", _self_adjointness_error, 1.0e-12),
    ("breakdown_identity", _breakdown_error, 1.0e-10),
    ("strang_mass_conservation", _strang_mass_error, 1.0e-12),
    ("strang_reversibility", _strang_reversibility_error, 1.0e-12),
    ("fit_sanity", _fit_error, 1.0e-12),
    ("limit_constant_forms", _limit_constant_error, 1.0e-10),
]


def run_checks() -> List[CheckResult]:
    """Run every check; a check that raises is reported as failed with a NaN measurement."""
    results = []
    for name, check, bound in CHECKS:
        try:
            measured = float(check())
        except (BosonStarError, ValueError, ArithmeticError) as ex:
            logger.error("check %s raised %s", name, ex)
            measured = float("nan")
        passed = bool(np.isfinite(measured) and measured <= bound)
        results.append(CheckResult(name, passed, measured, bound))
    return results
