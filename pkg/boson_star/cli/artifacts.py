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

"""Artifacts written under the output directory of a run."""

import logging
import os
import platform
from typing import Mapping, Optional

import pandas as pd

from ..grid import ComplexField, ModelParams, save_field
from ..utils import atomic_write_text
from ..version import __version__
from .run_config import RunConfig

logger = logging.getLogger(__name__)


class ArtifactWriter:
    """Writes the files of one run into ``directory``, each one atomically."""

    def __init__(self, directory: str) -> None:
        self._directory = directory

    @property
    def directory(self) -> str:
        """The output directory."""
        return self._directory

    def path(self, name: str) -> str:
        """The path of the artifact ``name``."""
        return os.path.join(self._directory, name)

    def write_csv(self, name: str, frame: pd.DataFrame) -> str:
        """Write ``frame`` as CSV with ``.`` decimals, ``,`` separators and LF line endings."""
        path = self.path(name)
        atomic_write_text(path, frame.to_csv(index=False, lineterminator="\n"))
        logger.info("wrote %s (%d rows)", path, len(frame))
        return path

    def write_text(self, name: str, text: str) -> str:
        """Write a text artifact."""
        path = self.path(name)
        atomic_write_text(path, text)
        logger.info("wrote %s", path)
        return path

    def write_field(self, name: str, field: ComplexField, params: ModelParams) -> str:
        """Write a QFLD field."""
        path = self.path(name)
        save_field(field, params, path)
        logger.info("wrote %s", path)
        return path

    def write_manifest(
        self,
        command: str,
        config: RunConfig,
        wall_time: float,
        results: Optional[Mapping[str, object]] = None,
    ) -> str:
        """Write ``manifest.txt`` and ``results.txt``.

        The manifest echoes the configuration as ``key = value`` lines under a commented
        header with the tool version, command and wall time, so it loads back through
        ``--config``. The command results go to ``results.txt``.
        """
        header = [
            "# boson-star run manifest",
            "# tool_version = {}".format(__version__),
            "# python_version = {}".format(platform.python_version()),
            "# command = {}".format(command),
            "# wall_time_s = {:.3f}".format(wall_time),
            "# results in results.txt",
        ]
        lines = ["{} = {}".format(key, value) for key, value in (results or {}).items()]
        self.write_text("results.txt", "".join(line + "\n" for line in lines))
        return self.write_text("manifest.txt", "\n".join(header) + "\n" + config.to_text())
