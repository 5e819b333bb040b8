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

"""Defines an abstract class for multi start solvers. A multi start solver runs a local
descent several times from different starting fields and keeps the best outcome."""

import logging
import time
from abc import ABC
from typing import Callable, Optional, TypeVar

import numpy as np

from ..grid import ComplexField
from .solver_algorithm import SolverAlgorithm, SolverResult
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)

ResultT = TypeVar("ResultT", bound=SolverResult)


# we disable a warning: "Method 'a method' is abstract in class 'SolverAlgorithm' but
# is not overridden (abstract-method) since this class is not intended for instantiation
# pylint: disable=W0223
class MultiStartSolver(SolverAlgorithm, ABC):
    """
    An abstract class that implements multi start descent and should be sub-classed by
    other solvers.
    """

    def __init__(self, config: Optional[SolverConfig] = None) -> None:
        """
        Constructs an instance of this solver.

        Args:
            config: Solver parameters. ``config.trials`` sets the number of trials: the first
                trial starts from the configured initializer, later trials add seeded smooth
                noise to it.
        """
        super().__init__(config)

    def multi_start_solve(
        self,
        descend: Callable[[ComplexField], ResultT],
        initial_guess: Callable[[int], ComplexField],
    ) -> ResultT:
        """Applies a multi start method given a local descent.

        Args:
            descend: A callable running the local descent from a starting field.
            initial_guess: A callable returning the starting field of a trial.

        Returns:
            The result with the lowest objective value over all trials.
        """
        fval_sol = np.inf
        best: Optional[ResultT] = None
        for trial in range(self.trials):
            start = initial_guess(trial)
            t_0 = time.time()
            result = descend(start)
            logger.debug("trial %d done in: %s seconds", trial, str(time.time() - t_0))
            # we minimize the objective
            if best is None or result.fval < fval_sol:
                fval_sol = result.fval
                best = result
        assert best is not None
        return best

    @property
    def trials(self) -> int:
        """Returns the number of trials for this solver.

        Returns:
            The number of trials.
        """
        return self.config.trials

    @trials.setter
    def trials(self, trials: int) -> None:
        """Sets the number of trials.

        Args:
            trials: The number of trials to set.
        """
        self.config.trials = trials
