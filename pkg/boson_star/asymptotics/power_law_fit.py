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

"""Power-law fits of scan columns against ``beta``."""

import logging
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Tuple

import numpy as np

from ..exceptions import FitError

logger = logging.getLogger(__name__)

MIN_ROWS = 4
R_SQUARED_GAIN = 0.01


@dataclass(frozen=True)
class FitResult:
    """A fit ``|column| = prefactor * beta**exponent``.

    Attributes:
        column: the fitted scan column.
        exponent: fitted slope of ``log |column|`` against ``log beta``.
        prefactor: ``exp`` of the fitted intercept.
        r_squared: coefficient of determination of the fit in log-log space.
        rows_used: number of rows entering the fit.
        excluded_betas: betas of converged rows left out of the fit.
        sign: common sign of the column values.
    """

    column: str
    exponent: float
    prefactor: float
    r_squared: float
    rows_used: int
    excluded_betas: Tuple[float, ...]
    sign: int

    def to_text(self) -> str:
        """``key=value`` lines describing the fit."""
        excluded = ";".join(repr(beta) for beta in self.excluded_betas)
        return "\n".join(
            [
                "column={}".format(self.column),
                "exponent={!r}".format(self.exponent),
                "prefactor={!r}".format(self.prefactor),
                "r_squared={!r}".format(self.r_squared),
                "rows_used={}".format(self.rows_used),
                "excluded_betas={}".format(excluded),
                "sign={}".format(self.sign),
            ]
        ) + "\n"


class _LogFit(NamedTuple):
    slope: float
    intercept: float
    r_squared: float


def _log_fit(betas: np.ndarray, values: np.ndarray) -> _LogFit:
    x = np.log(betas)
    y = np.log(np.abs(values))
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = np.sum((y - np.mean(y)) ** 2)
    r_squared = 1.0 - np.sum(residual ** 2) / total if total > 0 else 1.0
    return _LogFit(float(slope), float(intercept), float(r_squared))


def fit_exponent(rows: Iterable, column: str) -> FitResult:
    """Least-squares power law of ``column`` over the converged scan rows.

    The row with the largest ``beta`` is left out when that raises ``r_squared`` by more than
    0.01 and at least four rows remain.

    Args:
        rows: scan rows with ``beta``, ``converged`` and the attribute ``column``.
        column: the attribute to fit, e.g. ``"energy"`` or ``"riesz_quadruple"``.

    Returns:
        The fit.

    Raises:
        FitError: with fewer than four converged rows, or values of mixed sign or zero.
    """
    used = [row for row in rows if row.converged]
    if len(used) < MIN_ROWS:
        raise FitError(
            "Fitting {} needs at least {} converged rows, got {}".format(
                column, MIN_ROWS, len(used)
            )
        )
    betas = np.array([row.beta for row in used], dtype=float)
    values = np.array([getattr(row, column) for row in used], dtype=float)
    if np.all(values > 0):
        sign = 1
    elif np.all(values < 0):
        sign = -1
    else:
        raise FitError("Column {} has values of mixed sign or zero".format(column))

    fit = _log_fit(betas, values)
    excluded: Tuple[float, ...] = ()
    if len(used) > MIN_ROWS:
        keep = np.arange(len(betas)) != np.argmax(betas)
        reduced = _log_fit(betas[keep], values[keep])
        if reduced.r_squared > fit.r_squared + R_SQUARED_GAIN:
            excluded = (float(np.max(betas)),)
            logger.warning(
                "Fit of %s excludes beta=%s (r^2 %.4f -> %.4f)",
                column,
                excluded[0],
                fit.r_squared,
                reduced.r_squared,
            )
            fit = reduced
    return FitResult(
        column=column,
        exponent=fit.slope,
        prefactor=float(np.exp(fit.intercept)),
        r_squared=fit.r_squared,
        rows_used=len(used) - len(excluded),
        excluded_betas=excluded,
        sign=sign,
    )


def expected_exponent(column: str, alpha: float) -> float:
    """The predicted exponent of ``column`` as ``beta`` goes to zero.

    Raises:
        FitError: for a column without a prediction.
    """
    exponents = {
        "energy": 1.0 / (1.0 + alpha),
        "riesz_quadruple": -alpha / (1.0 + alpha),
        "kinetic_massless": -1.0 / (1.0 + alpha),
        "coulomb_quadruple": -1.0 / (1.0 + alpha),
        "mu": -1.0 / (1.0 + alpha),
    }
    if column not in exponents:
        raise FitError("No predicted exponent for column {}".format(column))
    return exponents[column]
