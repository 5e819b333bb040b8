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

"""The subcommands: each writes its artifacts and a manifest under ``config.out``."""

import logging
import sys
import time
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from ..algorithms import QProfile, SolverResultStatus, compute_q, estimate_nc, minimize
from ..asymptotics import (
    ComovingGridPolicy,
    FixedGridPolicy,
    GridPolicy,
    ScanRow,
    beta_scan,
    expected_exponent,
    fit_exponent,
    gamma_from_q,
    limit_constant,
    scan_frame,
    unconverged_betas,
)
from ..dynamics import evolve, perturb_ground_state
from ..energy import gaussian_field
from ..exceptions import FitError
from ..grid import ComplexField, load_field
from ..utils import make_rng
from .artifacts import ArtifactWriter
from .run_config import RunConfig
from .verify import run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NOT_CONVERGED = 2

FIT_COLUMNS = ("energy", "kinetic_massless", "coulomb_quadruple", "riesz_quadruple", "mu")


def cmd_verify(config: Optional[RunConfig] = None) -> int:
    """Print one ``name,status,measured,bound`` line per check.

    Returns:
        0 if every check passes, 1 otherwise; failing names go to stderr.
    """
    results = run_checks()
    print("name,status,measured,bound")
    for result in results:
        print(result.to_line())
    failed = [result.name for result in results if not result.passed]
    if failed:
        print("failed checks: {}".format(", ".join(failed)), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _q_profile(config: RunConfig) -> QProfile:
    if config.q_field:
        field, _ = load_field(config.q_field)
        logger.info("loaded Q from %s", config.q_field)
        return QProfile.from_field(field)
    logger.info("no q_field given; computing Q on %s", config.computational_grid)
    return compute_q(config.computational_grid, config.solver_config())


def _resolve_n_target(config: RunConfig) -> Tuple[float, Optional[QProfile]]:
    if config.n_target is not None:
        return config.n_target, None
    q = _q_profile(config)
    value, error = estimate_nc(q)
    logger.info("n_target = N_c = %.10g (+- %.3g)", value, error)
    return value, q


def cmd_compute_q(config: RunConfig) -> int:
    """Compute ``Q``; writes ``q.qfld``, ``pohozaev.csv``, ``trace.csv`` and the manifest."""
    start = time.time()
    writer = ArtifactWriter(config.out)
    q = compute_q(config.computational_grid, config.solver_config())
    nc, nc_error = estimate_nc(q)
    writer.write_field("q.qfld", q.field, q.params(config.alpha))
    report = pd.DataFrame(
        [
            {
                "kinetic_ratio": q.pohozaev.kinetic_ratio,
                "coulomb_ratio": q.pohozaev.coulomb_ratio,
                "balance_ratio": q.pohozaev.balance_ratio,
                "gn_value": q.gn_value,
                "nc": nc,
                "nc_error": nc_error,
                "residual": q.residual,
            }
        ]
    )
    writer.write_csv("pohozaev.csv", report)
    writer.write_csv("trace.csv", _trace_frame(q))
    writer.write_manifest(
        "compute-q",
        config,
        time.time() - start,
        {"status": q.status.name, "nc": nc, "nc_error": nc_error},
    )
    return EXIT_OK if q.status == SolverResultStatus.SUCCESS else EXIT_NOT_CONVERGED


def _trace_frame(result: QProfile) -> pd.DataFrame:
    return pd.DataFrame(
        [(r.iteration, r.energy, r.residual, r.dt) for r in result.trace],
        columns=["iter", "energy", "residual", "dt"],
    )


def cmd_ground_state(config: RunConfig) -> int:
    """Minimize ``E(beta, N)``; writes ``ground_state.qfld``, ``energy.csv``, ``trace.csv``.

    Returns:
        0 when the flow converged or detected an energy unbounded below, 2 otherwise.
    """
    start = time.time()
    writer = ArtifactWriter(config.out)
    n_target, _ = _resolve_n_target(config)
    params = config.model_params(n_target)
    result = minimize(params, config.computational_grid, config.solver_config())
    writer.write_field("ground_state.qfld", result.field, params)
    breakdown = result.energy
    energy_row = {
        "E_total": breakdown.total,
        "E_kinetic_half": breakdown.kinetic,
        "E_coulomb": breakdown.coulomb,
        "E_riesz": breakdown.riesz_alpha,
        "kinetic_massless": breakdown.massless_kinetic,
        "inv_kinetic": breakdown.inv_kinetic,
        "mu_projection": result.mu.projection,
        "mu_formula": result.mu.formula,
        "residual": result.residual,
        "iterations": result.iterations,
        "status": result.status.name,
    }
    writer.write_csv("energy.csv", pd.DataFrame([energy_row]))
    writer.write_csv("trace.csv", result.trace_frame())
    writer.write_manifest(
        "ground-state",
        config,
        time.time() - start,
        {"status": result.status.name, "n_target": n_target, "energy": breakdown.total},
    )
    if result.status in (SolverResultStatus.SUCCESS, SolverResultStatus.UNBOUNDED):
        return EXIT_OK
    return EXIT_NOT_CONVERGED


def _initial_datum(
    config: RunConfig, n_target: float
) -> Tuple[ComplexField, Optional[ComplexField]]:
    """The datum to evolve and the reference of the modulated distance."""
    if config.initial_field:
        field, _ = load_field(config.initial_field)
        if config.delta > 0:
            rng = make_rng(config.seed)
            return perturb_ground_state(field, config.delta, n_target, rng), field
        return field, field
    return gaussian_field(config.computational_grid, config.gaussian_width, n_target), None


def cmd_evolve(config: RunConfig) -> int:
    """Evolve to ``tmax``; writes ``diagnostics.csv``, ``final.qfld`` and optional snapshots.

    With ``initial_field`` the loaded profile is the reference of the modulated distance and,
    when ``delta > 0``, it is perturbed first with mass capped at ``n_target``.
    """
    start = time.time()
    writer = ArtifactWriter(config.out)
    n_target, _ = _resolve_n_target(config)
    psi0, reference = _initial_datum(config, n_target)
    params = config.model_params(n_target)
    monitor = config.monitor_config(writer.path("snapshots"))
    diagnostics = evolve(psi0, params, config.tmax, config.dt, monitor, reference)
    writer.write_csv("diagnostics.csv", diagnostics.to_frame())
    writer.write_field("final.qfld", diagnostics.final_state, params)
    writer.write_manifest(
        "evolve",
        config,
        time.time() - start,
        {
            "verdict": diagnostics.verdict.value,
            "max_mass_deviation": diagnostics.max_mass_deviation,
            "energy_drift": diagnostics.energy_drift,
        },
    )
    return EXIT_OK


def _grid_policy(config: RunConfig) -> GridPolicy:
    if config.grid_policy == "fixed":
        return FixedGridPolicy(config.computational_grid)
    return ComovingGridPolicy(config.grid, config.box, config.betas[0], config.alpha)


def _fits_text(rows: List[ScanRow], config: RunConfig, q: QProfile) -> str:
    blocks = []
    constant = limit_constant(q, config.alpha, config.mass)
    blocks.append(
        "gamma={!r}\nlimit_constant={!r}\nunconverged_betas={}\n".format(
            gamma_from_q(q, config.alpha, config.mass),
            constant,
            ";".join(repr(beta) for beta in unconverged_betas(rows)),
        )
    )
    for column in FIT_COLUMNS:
        try:
            fit = fit_exponent(rows, column)
        except FitError as ex:
            logger.warning("no fit for %s: %s", column, ex)
            blocks.append("column={}\nerror={}\n".format(column, ex))
            continue
        text = fit.to_text()
        text += "expected_exponent={!r}\n".format(expected_exponent(column, config.alpha))
        if column == "energy":
            text += "prefactor_over_limit_constant={!r}\n".format(fit.prefactor / constant)
        blocks.append(text)
    return "\n".join(blocks)


def cmd_beta_scan(config: RunConfig) -> int:
    """Scan ``betas`` at the critical mass; writes ``scan.csv`` and ``fits.txt``."""
    start = time.time()
    writer = ArtifactWriter(config.out)
    q = _q_profile(config)
    nc = config.n_target if config.n_target is not None else estimate_nc(q)[0]
    rows = beta_scan(
        config.alpha,
        config.mass,
        config.betas,
        _grid_policy(config),
        q,
        config.solver_config(box_study=False),
        nc,
    )
    writer.write_csv("scan.csv", scan_frame(rows))
    writer.write_text("fits.txt", _fits_text(rows, config, q))
    writer.write_manifest(
        "beta-scan",
        config,
        time.time() - start,
        {"nc": nc, "converged_rows": sum(row.converged for row in rows)},
    )
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "verify": cmd_verify,
    "compute-q": cmd_compute_q,
    "ground-state": cmd_ground_state,
    "evolve": cmd_evolve,
    "beta-scan": cmd_beta_scan,
}
