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

"""Reading and writing fields in the QFLD v1 binary format.

Layout, little-endian::

    "QFLD" | u32 version=1 | u32 n | f64 L | f64 alpha | f64 beta | f64 m | f64 N
    | n**3 x (f64 re, f64 im) in row-major order
"""

import logging
import os
import struct
from typing import Tuple, Union

import numpy as np

from ..exceptions import (
    BadMagicError,
    FieldFormatError,
    TruncatedPayloadError,
    VersionMismatchError,
)
from ..utils import atomic_write_bytes
from .complex_field import ComplexField
from .grid import Grid
from .model_params import ModelParams

logger = logging.getLogger(__name__)

MAGIC = b"QFLD"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sII5d")
_PAYLOAD_DTYPE = np.dtype("<c16")


def encode_field(field: ComplexField, params: ModelParams) -> bytes:
    """Serialize ``field`` and ``params`` to QFLD bytes."""
    grid = field.grid
    header = _HEADER.pack(
        MAGIC,
        FORMAT_VERSION,
        grid.n,
        grid.length,
        params.alpha,
        params.beta,
        params.mass_m,
        params.constraint_n,
    )
    payload = np.ascontiguousarray(field.values, dtype=_PAYLOAD_DTYPE).tobytes(order="C")
    return header + payload


def decode_field(data: bytes) -> Tuple[ComplexField, ModelParams]:
    """Deserialize QFLD bytes.

    Raises:
        BadMagicError: if the magic bytes are wrong.
        VersionMismatchError: if the format version is not 1.
        TruncatedPayloadError: if the header or the payload is incomplete.
        FieldFormatError: if the header describes an invalid grid or invalid parameters, or
            the payload holds non-finite samples.
    """
    head = bytes(data[: len(MAGIC)])
    if head != MAGIC[: len(head)]:
        raise BadMagicError("Not a QFLD file: magic {!r}".format(head))
    if len(data) < _HEADER.size:
        raise TruncatedPayloadError(
            "Header needs {} bytes, file has {}".format(_HEADER.size, len(data))
        )
    _, version, n, length, alpha, beta, mass_m, constraint_n = _HEADER.unpack_from(data)
    if version != FORMAT_VERSION:
        raise VersionMismatchError(
            "Unsupported QFLD version {}, expected {}".format(version, FORMAT_VERSION)
        )
    try:
        grid = Grid(n, length)
        params = ModelParams(alpha, beta, mass_m, constraint_n)
    except ValueError as ex:
        raise FieldFormatError("Invalid QFLD header: {}".format(ex)) from ex
    expected = grid.size * _PAYLOAD_DTYPE.itemsize
    payload = data[_HEADER.size :]
    if len(payload) != expected:
        raise TruncatedPayloadError(
            "Payload for n={} needs {} bytes, file has {}".format(n, expected, len(payload))
        )
    values = np.frombuffer(payload, dtype=_PAYLOAD_DTYPE).astype(np.complex128)
    if not np.all(np.isfinite(values)):
        raise FieldFormatError("QFLD payload holds non-finite samples")
    return ComplexField(grid, values), params


def save_field(
    field: ComplexField, params: ModelParams, path: Union[str, "os.PathLike[str]"]
) -> None:
    """Write ``field`` and ``params`` to ``path`` atomically."""
    atomic_write_bytes(path, encode_field(field, params))
    logger.debug("wrote field n=%d to %s", field.grid.n, path)


def load_field(path: Union[str, "os.PathLike[str]"]) -> Tuple[ComplexField, ModelParams]:
    """Read a field and its parameters from ``path``."""
    with open(path, "rb") as stream:
        data = stream.read()
    return decode_field(data)
