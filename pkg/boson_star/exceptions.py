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

"""Errors raised by boson-star."""

from typing import Any, List, Optional

from qiskit.exceptions import QiskitError


class BosonStarError(QiskitError):
    """Base class for errors raised by the boson-star package."""

    pass


class GridMismatchError(BosonStarError):
    """Two fields or a field and an operator do not live on the same grid."""

    pass


class DomainError(BosonStarError, ValueError):
    """An argument lies outside the domain of an operation."""

    pass


class ResolutionError(DomainError):
    """A (rescaled) profile is too narrow or too wide for its grid."""

    pass


class FieldFormatError(BosonStarError):
    """A field file could not be decoded."""

    pass


class BadMagicError(FieldFormatError):
    """The file does not start with the field-file magic bytes."""

    pass


class VersionMismatchError(FieldFormatError):
    """The file uses a format version this reader does not understand."""

    pass


class TruncatedPayloadError(FieldFormatError):
    """The file ends before the header or the sample payload is complete."""

    pass


class ConvergenceError(BosonStarError):
    """An iterative solver stalled.

    Args:
        message: error description.
        trace: the per-iteration records collected before the stall.
    """

    def __init__(self, message: str, trace: Optional[List[Any]] = None) -> None:
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []


class IntegratorError(BosonStarError):
    """Time integration produced non-finite samples.

    Args:
        message: error description.
        last_state: the last finite state of the trajectory.
        time: the time of ``last_state``.
    """

    def __init__(self, message: str, last_state: Any = None, time: Optional[float] = None):
        super().__init__(message)
        self.last_state = last_state
        self.time = time


class FitError(BosonStarError):
    """A power-law fit cannot be performed on the supplied rows."""

    pass


class ConfigError(BosonStarError, ValueError):
    """A run configuration is invalid."""

    pass
