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

"""Boson Star Test Case"""

from abc import ABC
import inspect
import logging
import os
import tempfile
import time
import unittest
import warnings
from typing import Optional

import numpy as np

from boson_star.grid import ComplexField, Grid

SLOW_TEST_SECONDS = 5.0


class BosonStarTestCase(unittest.TestCase, ABC):
    """Base class of the boson-star tests.

    Prints the wall time of tests slower than ``SLOW_TEST_SECONDS``. When ``LOG_LEVEL`` is set,
    ``self.log`` also writes to ``<test module>.log`` next to the test module.
    """

    moduleName = None
    log = None

    def setUp(self) -> None:
        warnings.filterwarnings("default", category=DeprecationWarning)
        self._started_at = time.time()

    def tearDown(self) -> None:
        elapsed = time.time() - self._started_at
        if elapsed > SLOW_TEST_SECONDS:
            print("({:.2f}s)".format(elapsed), flush=True)

    @classmethod
    def setUpClass(cls) -> None:
        cls.moduleName = os.path.splitext(inspect.getfile(cls))[0]
        cls.log = logging.getLogger(cls.__name__)
        level_name = os.getenv("LOG_LEVEL")
        if not level_name:
            return
        handler = logging.FileHandler("{}.log".format(cls.moduleName))
        handler.setFormatter(
            logging.Formatter(
                "{}.%(funcName)s:%(levelname)s:%(asctime)s: %(message)s".format(cls.__name__)
            )
        )
        cls.log.addHandler(handler)
        cls.log.setLevel(getattr(logging, level_name.upper(), logging.INFO))

    def get_resource_path(self, filename: str, path: Optional[str] = None) -> str:
        """The absolute path of ``filename`` relative to the test directory or to ``path``."""
        root = os.path.dirname(os.path.abspath(__file__))
        if path is not None:
            root = os.path.join(root, path)
        return os.path.normpath(os.path.join(root, filename))

    def make_temp_dir(self) -> str:
        """A temporary directory removed after the test."""
        tmp = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        self.addCleanup(tmp.cleanup)
        return tmp.name

    @staticmethod
    def random_complex_field(grid: Grid, seed: int = 0) -> ComplexField:
        """A reproducible random complex field with standard normal samples."""
        rng = np.random.default_rng(seed)
        values = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
        return ComplexField(grid, values)
