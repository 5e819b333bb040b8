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

"""Closed-form limits of the rescaled minimizers as ``beta`` goes to zero."""

from typing import Optional, Tuple

from ..algorithms import QProfile
from ..energy import (
    align_phase,
    check_resolution,
    dilate,
    interaction_quadruple,
    kinetic_form,
    shift_to_match,
)
from ..exceptions import DomainError
from ..grid import ComplexField


def _limit_terms(q: QProfile, alpha: float, m: float) -> Tuple[float, float]:
    if m <= 0:
        raise DomainError("The limit constants need m > 0, got {}".format(m))
    inv_kinetic = m ** 2 * kinetic_form(q.field, -1.0)
    riesz = interaction_quadruple(q.field, alpha)
    if inv_kinetic <= 0 or riesz <= 0:
        raise DomainError(
            "Degenerate limit terms: m**2 <Q, (-Laplacian)**(-1/2) Q> = {}, riesz = {}".format(
                inv_kinetic, riesz
            )
        )
    return inv_kinetic, riesz


def gamma_from_q(q: QProfile, alpha: float, m: float) -> float:
    """The concentration scale
    ``gamma = (m**2 <Q, (-Laplacian)**(-1/2) Q> / int (|x|**-alpha * Q**2) Q**2)**(1/(1+alpha))``.

    Raises:
        DomainError: if ``m <= 0`` or a term degenerates.
    """
    inv_kinetic, riesz = _limit_terms(q, alpha, m)
    return float((inv_kinetic / riesz) ** (1.0 / (1.0 + alpha)))


def limit_constant(q: QProfile, alpha: float, m: float) -> float:
    """The limit of ``E(beta, N_c) / beta**(1/(1+alpha))`` as ``beta`` goes to zero,
    ``A**(alpha/(1+alpha)) B**(1/(1+alpha)) / 2`` with ``A = m**2 <Q, (-Laplacian)**(-1/2) Q>``
    and ``B = int (|x|**-alpha * Q**2) Q**2``."""
    inv_kinetic, riesz = _limit_terms(q, alpha, m)
    exponent = 1.0 / (1.0 + alpha)
    return float(0.5 * inv_kinetic ** (alpha * exponent) * riesz ** exponent)


def limit_constant_variational(
    q: QProfile, alpha: float, m: float, gamma: Optional[float] = None
) -> float:
    """``A / (4 gamma) + gamma**alpha B / 4``; at :func:`gamma_from_q` both terms coincide and
    the sum equals :func:`limit_constant`."""
    inv_kinetic, riesz = _limit_terms(q, alpha, m)
    if gamma is None:
        gamma = float((inv_kinetic / riesz) ** (1.0 / (1.0 + alpha)))
    if gamma <= 0:
        raise DomainError("gamma must be positive, got {}".format(gamma))
    return float(inv_kinetic / (4.0 * gamma) + gamma ** alpha * riesz / 4.0)


def rescaled_profile_error(
    phi_beta: ComplexField, beta: float, alpha: float, q: QProfile, gamma: float
) -> float:
    """Relative L2 distance between the blown-up minimizer and its predicted limit.

    Compares ``w = beta**(3/(2(1+alpha))) phi_beta(beta**(1/(1+alpha)) x)`` with
    ``gamma**(3/2) Q(gamma x)``, both sampled on the grid of ``Q``, after matching their
    centres of mass by a lattice shift and their global phases.

    Raises:
        DomainError: if ``beta`` or ``gamma`` is not positive.
        ResolutionError: if either rescaled profile is under- or over-resolved.
    """
    if beta <= 0 or gamma <= 0:
        raise DomainError("beta and gamma must be positive, got {} and {}".format(beta, gamma))
    grid = q.field.grid
    blown_up = dilate(phi_beta, beta ** (1.0 / (1.0 + alpha)), grid)
    target = dilate(q.field, gamma, grid)
    check_resolution(blown_up)
    check_resolution(target)
    blown_up = align_phase(blown_up.roll(shift_to_match(target, blown_up)), target)
    return (blown_up - target).norm() / target.norm()

