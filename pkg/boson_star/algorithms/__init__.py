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

"""
Ground-state solvers (:mod:`boson_star.algorithms`)
===================================================

Constrained energy minimizers and the optimizer ``Q`` that fixes the critical mass.

.. currentmodule:: boson_star.algorithms

Base classes for solvers and results
====================================

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   SolverAlgorithm
   MultiStartSolver
   SolverResult
   SolverResultStatus
   SolverConfig
   FlowRecord

Solvers and results
===================

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

   GradientFlowMinimizer
   GroundStateResult
   QSolver
   QProfile
   BoxStudy
   minimize
   compute_q
   estimate_nc

"""

from .gradient_flow_minimizer import GradientFlowMinimizer, GroundStateResult, minimize
from .multistart_solver import MultiStartSolver
from .q_solver import BoxStudy, QProfile, QSolver, compute_q, estimate_nc
from .solver_algorithm import FlowRecord, SolverAlgorithm, SolverResult, SolverResultStatus
from .solver_config import SolverConfig

__all__ = [
    "SolverAlgorithm",
    "MultiStartSolver",
    "SolverResult",
    "SolverResultStatus",
    "SolverConfig",
    "FlowRecord",
    "GradientFlowMinimizer",
    "GroundStateResult",
    "QSolver",
    "QProfile",
    "BoxStudy",
    "minimize",
    "compute_q",
    "estimate_nc",
]
