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

"""Run configuration: defaults, a ``key = value`` file and command-line overrides."""

import math
import os
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from ..algorithms import SolverConfig
from ..dynamics import MonitorConfig
from ..exceptions import ConfigError
from ..grid import Grid, ModelParams

GRID_POLICIES = ("comoving", "fixed")


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one command run.

    ``n_target`` of ``None`` selects the critical mass of the optimizer ``Q``. ``seed`` seeds
    every random stream of the run; the starting field is the Gaussian of ``gaussian_width``
    unless ``initial_field`` names a QFLD file.
    """

    grid: int = 64
    box: float = 20.0
    alpha: float = 0.5
    beta: float = 0.0
    mass: float = 1.0
    n_target: Optional[float] = None
    tol: float = 1.0e-6
    dt: float = 0.01
    tmax: float = 10.0
    out: str = "out"
    seed: int = 0
    max_iters: int = 20000
    backtrack: float = 0.5
    gaussian_width: float = 1.0
    initial_field: Optional[str] = None
    q_field: Optional[str] = None
    betas: Tuple[float, ...] = (0.2, 0.1, 0.05, 0.025, 0.0125)
    grid_policy: str = "comoving"
    sample_every: int = 10
    snapshot_every: int = 0
    growth_factor: float = 5.0
    delta: float = 0.0
    box_study: bool = True

    def validate(self) -> "RunConfig":
        """Check every value; returns ``self``.

        Raises:
            ConfigError: naming the first offending key and an admissible value.
        """
        if self.grid < 8 or self.grid & (self.grid - 1):
            _fail("grid", self.grid, "a power of two >= 8, e.g. grid = 64")
        _positive("box", self.box)
        if not 0.0 < self.alpha < 1.0:
            _fail("alpha", self.alpha, "in (0, 1), e.g. alpha = 0.5")
        if not math.isfinite(self.beta):
            _fail("beta", self.beta, "a finite number")
        if not (math.isfinite(self.mass) and self.mass >= 0):
            _fail("mass", self.mass, ">= 0")
        if self.n_target is not None:
            _positive("n_target", self.n_target)
        _positive("tol", self.tol)
        _positive("dt", self.dt)
        _positive("tmax", self.tmax)
        steps = round(self.tmax / self.dt)
        if steps < 1 or abs(steps * self.dt - self.tmax) > 1e-9 * self.tmax:
            _fail("tmax", self.tmax, "an integer multiple of dt = {}".format(self.dt))
        if self.seed < 0:
            _fail("seed", self.seed, "a non-negative integer")
        if self.max_iters < 1:
            _fail("max_iters", self.max_iters, ">= 1")
        if not 0.0 < self.backtrack < 1.0:
            _fail("backtrack", self.backtrack, "in (0, 1), e.g. backtrack = 0.5")
        _positive("gaussian_width", self.gaussian_width)
        for key in ("initial_field", "q_field"):
            path = getattr(self, key)
            if path is not None and not os.path.isfile(path):
                _fail(key, path, "an existing QFLD file")
        if not self.betas or any(beta <= 0 for beta in self.betas):
            _fail("betas", self.betas, "positive values, e.g. betas = 0.2,0.1,0.05,0.025")
        if any(later >= earlier for earlier, later in zip(self.betas, self.betas[1:])):
            _fail("betas", self.betas, "strictly decreasing")
        if self.grid_policy not in GRID_POLICIES:
            _fail("grid_policy", self.grid_policy, "one of {}".format(", ".join(GRID_POLICIES)))
        if self.sample_every < 1:
            _fail("sample_every", self.sample_every, ">= 1")
        if self.snapshot_every < 0:
            _fail("snapshot_every", self.snapshot_every, ">= 0")
        if self.growth_factor <= 1.0:
            _fail("growth_factor", self.growth_factor, "> 1, e.g. growth_factor = 5")
        if self.delta < 0:
            _fail("delta", self.delta, ">= 0")
        return self

    @property
    def computational_grid(self) -> Grid:
        """The grid named by ``grid`` and ``box``."""
        return Grid(self.grid, self.box)

    def model_params(self, constraint_n: float) -> ModelParams:
        """The model parameters at mass ``constraint_n``."""
        return ModelParams(self.alpha, self.beta, self.mass, constraint_n)

    def solver_config(self, box_study: Optional[bool] = None) -> SolverConfig:
        """The solver parameters of this run."""
        return SolverConfig(
            max_iters=self.max_iters,
            residual_tol=self.tol,
            backtrack_factor=self.backtrack,
            seed="loaded-field" if self.initial_field else "gaussian",
            gaussian_width=self.gaussian_width,
            initial_field_path=self.initial_field,
            rng_seed=self.seed,
            box_study=self.box_study if box_study is None else box_study,
        )

    def monitor_config(self, snapshot_dir: Optional[str] = None) -> MonitorConfig:
        """The sampling parameters of this run."""
        return MonitorConfig(
            sample_every=self.sample_every,
            snapshot_every=self.snapshot_every,
            snapshot_dir=snapshot_dir,
            growth_factor=self.growth_factor,
        )

    def to_text(self) -> str:
        """The configuration as ``key = value`` lines, readable by :func:`parse_config_text`."""
        lines = []
        for key, value in asdict(self).items():
            if value is None:
                continue
            if isinstance(value, tuple):
                value = ",".join(repr(item) for item in value)
            elif isinstance(value, bool):
                value = "true" if value else "false"
            lines.append("{} = {}".format(key, value))
        return "\n".join(lines) + "\n"


def _fail(key: str, value: Any, expected: str) -> None:
    raise ConfigError("Invalid {} = {}: expected {}".format(key, value, expected))


def _positive(key: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        _fail(key, value, "a positive number")


def _optional_str(raw: str) -> Optional[str]:
    return raw or None


def _floats(raw: str) -> Tuple[float, ...]:
    return tuple(float(item) for item in raw.replace(";", ",").split(",") if item.strip())


def _boolean(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("not a boolean: {}".format(raw))


def _optional_float(raw: str) -> Optional[float]:
    return None if raw.strip().lower() in ("", "none") else float(raw)


_CONVERTERS: Dict[str, Callable[[str], Any]] = {
    "grid": int,
    "box": float,
    "alpha": float,
    "beta": float,
    "mass": float,
    "n_target": _optional_float,
    "tol": float,
    "dt": float,
    "tmax": float,
    "out": str,
    "seed": int,
    "max_iters": int,
    "backtrack": float,
    "gaussian_width": float,
    "initial_field": _optional_str,
    "q_field": _optional_str,
    "betas": _floats,
    "grid_policy": str,
    "sample_every": int,
    "snapshot_every": int,
    "growth_factor": float,
    "delta": float,
    "box_study": _boolean,
}


def convert_value(key: str, raw: str, source: str = "<config>") -> Any:
    """Convert the text ``raw`` of ``key``.

    Raises:
        ConfigError: for an unknown key or an unparsable value.
    """
    key = key.strip().replace("-", "_")
    if key not in _CONVERTERS:
        raise ConfigError(
            "Unknown configuration key '{}' in {}; known keys: {}".format(
                key, source, ", ".join(sorted(_CONVERTERS))
            )
        )
    try:
        return _CONVERTERS[key](raw.strip())
    except ValueError as ex:
        raise ConfigError("Cannot parse {} = {} in {}: {}".format(key, raw, source, ex)) from ex


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, Any]:
    """Parse ``key = value`` lines; ``#`` starts a comment.

    Raises:
        ConfigError: for malformed lines, unknown keys or unparsable values.
    """
    values: Dict[str, Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ConfigError(
                "Expected 'key = value' at {}:{}, got '{}'".format(source, number, line)
            )
        key, raw = content.split("=", 1)
        location = "{}:{}".format(source, number)
        values[key.strip().replace("-", "_")] = convert_value(key, raw, location)
    return values


def load_config_file(path: str) -> Dict[str, Any]:
    """Read and parse a configuration file.

    Raises:
        ConfigError: if the file cannot be read or parsed.
    """
    try:
        with open(path, "r", encoding="utf-8") as stream:
            text = stream.read()
    except OSError as ex:
        raise ConfigError("Cannot read configuration file {}: {}".format(path, ex)) from ex
    return parse_config_text(text, path)


def build_run_config(
    file_values: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Merge defaults, file values and overrides (highest precedence) and validate.

    ``None`` overrides are ignored, so unset command-line flags keep the file value.

    Raises:
        ConfigError: for unknown keys or invalid values.
    """
    merged: Dict[str, Any] = {}
    for source in (file_values or {}, overrides or {}):
        for key, value in source.items():
            if value is None:
                continue
            key = key.replace("-", "_")
            if key not in _CONVERTERS:
                raise ConfigError("Unknown configuration key '{}'".format(key))
            if isinstance(value, str) and _CONVERTERS[key] not in (str, _optional_str):
                value = convert_value(key, value)
            merged[key] = value
    if "betas" in merged:
        merged["betas"] = tuple(float(beta) for beta in merged["betas"])
    return RunConfig(**merged).validate()

