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

"""The scan of ground states at the critical mass along a decreasing ladder of ``beta``."""

import logging
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..algorithms import GroundStateResult, QProfile, SolverConfig, minimize
from ..energy import check_resolution, dilate
from ..exceptions import DomainError, ResolutionError
from ..grid import ComplexField, ModelParams, normalize
from .grid_policy import GridPolicy
from .limit_profile import gamma_from_q, rescaled_profile_error

logger = logging.getLogger(__name__)

SCAN_COLUMNS = {
    "beta": "beta",
    "energy": "E",
    "kinetic_massless": "kin",
    "coulomb_quadruple": "coulomb",
    "riesz_quadruple": "riesz",
    "mu": "mu",
    "profile_error": "profile_err",
    "n": "n",
    "length": "L",
}


@dataclass(frozen=True)
class ScanRow:
    """One point of a beta scan."""

    beta: float
    energy: float
    kinetic_massless: float
    coulomb_quadruple: float
    riesz_quadruple: float
    mu: float
    profile_error: float
    n: int
    length: float
    converged: bool
    residual: float


def _validate_betas(betas: Sequence[float]) -> List[float]:
    values = [float(beta) for beta in betas]
    if not values:
        raise DomainError("A beta scan needs at least one beta")
    if any(beta <= 0 for beta in values):
        raise DomainError("Scan betas must be positive, got {}".format(values))
    if any(later >= earlier for earlier, later in zip(values, values[1:])):
        raise DomainError("Scan betas must be strictly decreasing, got {}".format(values))
    return values


def _profile_error(
    result: GroundStateResult, beta: float, alpha: float, q: QProfile, gamma: float
) -> float:
    """The rescaled profile error of a converged row, NaN otherwise."""
    if not result.converged:
        return float("nan")
    try:
        return rescaled_profile_error(result.field, beta, alpha, q, gamma)
    except ResolutionError as ex:
        logger.warning("beta=%s: no profile error, %s", beta, ex)
        return float("nan")


def beta_scan(
    alpha: float,
    m: float,
    betas: Sequence[float],
    policy: GridPolicy,
    q: QProfile,
    config: Optional[SolverConfig] = None,
    nc: Optional[float] = None,
) -> List[ScanRow]:
    """Minimize ``E(beta, N)`` for each ``beta`` of a decreasing ladder at ``N = nc``.

    Each run after the first starts from the last converged minimizer, concentrated by the
    predicted length factor ``(beta_prev / beta)**(1/(1+alpha))`` onto the next grid. Rows that
    did not converge are kept with ``converged=False`` and a NaN profile error; a converged
    row whose rescaled profile leaves the resolved range also gets a NaN profile error.

    Args:
        alpha: Riesz exponent.
        m: particle mass, positive.
        betas: strictly decreasing positive perturbation strengths.
        policy: grid of each scan point.
        q: the optimizer ``Q``, reference of the profile errors.
        config: ground-state solver parameters.
        nc: the mass constraint, by default ``q.nc``.

    Returns:
        One row per beta, in scan order.

    Raises:
        DomainError: for an invalid ladder or ``m <= 0``.
        ResolutionError: if a warm start leaves the resolved range.
    """
    ladder = _validate_betas(betas)
    target = q.nc if nc is None else nc
    gamma = gamma_from_q(q, alpha, m)
    logger.info("beta scan at N=%.10g, gamma=%.6g, policy %s", target, gamma, policy)

    rows: List[ScanRow] = []
    previous: Optional[Tuple[ComplexField, float]] = None
    for beta in ladder:
        grid = policy.grid_for(beta)
        params = ModelParams(alpha, beta, m, target)
        initial = None
        if previous is not None:
            field, previous_beta = previous
            factor = (previous_beta / beta) ** (1.0 / (1.0 + alpha))
            initial = normalize(dilate(field, factor, grid), target)
            check_resolution(initial)
        result = minimize(params, grid, config, initial)
        if result.converged:
            previous = (result.field, beta)
        else:
            logger.warning(
                "beta=%s did not converge (%s, residual %.3e); kept and excluded from fits",
                beta,
                result.status.name,
                result.residual,
            )
        rows.append(
            ScanRow(
                beta=beta,
                energy=result.energy.total,
                kinetic_massless=result.energy.massless_kinetic,
                coulomb_quadruple=result.energy.coulomb_quadruple,
                riesz_quadruple=result.energy.riesz_quadruple,
                mu=result.mu.projection,
                profile_error=_profile_error(result, beta, alpha, q, gamma),
                n=grid.n,
                length=grid.length,
                converged=result.converged,
                residual=result.residual,
            )
        )
    return rows


def scan_frame(rows: Sequence[ScanRow]) -> pd.DataFrame:
    """The rows as a table with the ``scan.csv`` header
    ``beta,E,kin,coulomb,riesz,mu,profile_err,n,L``."""
    frame = pd.DataFrame([asdict(row) for row in rows], columns=list(ScanRow.__annotations__))
    return frame[list(SCAN_COLUMNS)].rename(columns=SCAN_COLUMNS)


def unconverged_betas(rows: Sequence[ScanRow]) -> List[float]:
    """Betas of the rows that did not converge."""
    return [row.beta for row in rows if not row.converged]


def energy_ratio_trend(rows: Sequence[ScanRow]) -> np.ndarray:
    """``kinetic_massless / (coulomb_quadruple / 2)`` per row; tends to one as ``beta`` drops."""
    return np.array([row.kinetic_massless / (0.5 * row.coulomb_quadruple) for row in rows])
