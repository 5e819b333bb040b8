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

"""Test the field file format"""

import os
import struct
import unittest
from test import BosonStarTestCase

import numpy as np

from boson_star.exceptions import (
    BadMagicError,
    FieldFormatError,
    TruncatedPayloadError,
    VersionMismatchError,
)
from boson_star.grid import Grid, ModelParams, decode_field, encode_field, load_field, save_field


class TestFieldIO(BosonStarTestCase):
    """Field file tests."""

    def setUp(self):
        super().setUp()
        self.grid = Grid(8, 6.0)
        self.field = self.random_complex_field(self.grid, 11)
        self.params = ModelParams(alpha=0.5, beta=-0.25, mass_m=1.0, constraint_n=2.0)

    def test_layout(self):
        """Test the header layout and payload size."""
        data = encode_field(self.field, self.params)
        self.assertEqual(data[:4], b"QFLD")
        version, n = struct.unpack_from("<II", data, 4)
        self.assertEqual((version, n), (1, 8))
        self.assertEqual(struct.unpack_from("<5d", data, 12), (6.0, 0.5, -0.25, 1.0, 2.0))
        self.assertEqual(len(data), 52 + 16 * 8 ** 3)
        re, im = struct.unpack_from("<2d", data, 52)
        self.assertEqual(complex(re, im), complex(self.field.values[0, 0, 0]))
        re, im = struct.unpack_from("<2d", data, 52 + 16)
        self.assertEqual(complex(re, im), complex(self.field.values[0, 0, 1]))

    def test_save_load(self):
        """Test a saved field loads bit for bit."""
        path = os.path.join(self.make_temp_dir(), "sub", "field.qfld")
        save_field(self.field, self.params, path)
        field, params = load_field(path)
        self.assertEqual(field.grid, self.grid)
        self.assertEqual(params, self.params)
        np.testing.assert_array_equal(field.values, self.field.values)

    def test_bad_magic(self):
        """Test a wrong magic."""
        data = b"QFLX" + encode_field(self.field, self.params)[4:]
        with self.assertRaises(BadMagicError):
            decode_field(data)
        with self.assertRaises(BadMagicError):
            decode_field(b"XY")

    def test_version_mismatch(self):
        """Test an unsupported version."""
        data = bytearray(encode_field(self.field, self.params))
        struct.pack_into("<I", data, 4, 2)
        with self.assertRaises(VersionMismatchError):
            decode_field(bytes(data))

    def test_truncated(self):
        """Test truncated headers and payloads."""
        data = encode_field(self.field, self.params)
        with self.assertRaises(TruncatedPayloadError):
            decode_field(data[:20])
        with self.assertRaises(TruncatedPayloadError):
            decode_field(data[:-1])
        for short in (b"", b"Q", b"QFL"):
            with self.assertRaises(TruncatedPayloadError):
                decode_field(short)
        with self.assertRaises(FieldFormatError):
            decode_field(data + b"\x00")

    def test_invalid_header(self):
        """Test header values outside their domain are format errors."""
        data = bytearray(encode_field(self.field, self.params))
        struct.pack_into("<I", data, 8, 12)
        with self.assertRaises(FieldFormatError):
            decode_field(bytes(data))
        data = bytearray(encode_field(self.field, self.params))
        struct.pack_into("<d", data, 12, -6.0)
        with self.assertRaises(FieldFormatError):
            decode_field(bytes(data))
        data = bytearray(encode_field(self.field, self.params))
        struct.pack_into("<d", data, 20, 1.5)
        with self.assertRaises(FieldFormatError):
            decode_field(bytes(data))

    def test_non_finite_payload(self):
        """Test a NaN sample is a format error."""
        data = bytearray(encode_field(self.field, self.params))
        struct.pack_into("<d", data, 52, float("nan"))
        with self.assertRaises(FieldFormatError):
            decode_field(bytes(data))


if __name__ == "__main__":
    unittest.main()
