from pathlib import Path
from typing import Any

import yaml
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, field_validator, model_validator

from rotation_toolkit.domain.circle import Angle, LiftParams
from rotation_toolkit.domain.types import Command, OutputFormat, SweepAxis
from rotation_toolkit.fixtures import FIXTURES, build_example1, build_fixture
from rotation_toolkit.sde.fields import VectorFieldSet
from rotation_toolkit.sde.presets import parse_vector_field
from rotation_toolkit.settings import settings
from rotation_toolkit.systems.models import RandomSystem

SDE_COMMANDS = {Command.SDE_ROT, Command.SAMPLING}
SYSTEM_COMMANDS = set(Command) - SDE_COMMANDS - {Command.NS_COUNTEREXAMPLE}


def _load_yaml(path: Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


class ExperimentConfig(BaseModel):
    """One command with its system, parameters and output settings."""
    model_config = ConfigDict(extra="forbid")

    command : Command

    # system or vector field
    fixture : str | None = None
    system : RandomSystem | None = None
    vector_field : VectorFieldSet | None = None
    vf_spec : str | None = None
    start : int | None = Field(default=None, ge=0)

    # lift parameters and starting points
    q : float = 0.0
    alpha : float = 0.0
    q_prime : float | None = None
    alpha_prime : float | None = None
    s0 : Angle = 0.0
    s0_list : list[Angle] = Field(default_factory=lambda: [0.25, 0.75])
    x0 : float | None = None

    # sample sizes
    n : PositiveInt = 10_000
    n_prob : PositiveInt | None = None
    bins : PositiveInt = 100

    # sde
    horizon : PositiveFloat = 1000.0
    dts : list[PositiveFloat] = Field(default_factory=lambda: [0.2, 0.1, 0.05, 0.025])
    dt : PositiveFloat = 0.1
    dt_internal : PositiveFloat = 0.005
    substeps : PositiveInt = settings.HEUN_SUBSTEPS

    # sweeps and offsets
    grid : list[float] | None = None
    axis : SweepAxis = SweepAxis.Q
    offsets : dict[int, float] = Field(default_factory=lambda: {0: 0.5, 1: 0.5})
    independent_streams : bool = False

    # run
    seed : int | None = Field(default=None, ge=0, lt=2**64)
    out : Path | None = None
    format : OutputFormat = OutputFormat.CSV
    threads : PositiveInt = settings.THREADS

    @field_validator("fixture")
    @classmethod
    def _check_fixture(cls, fixture: str | None) -> str | None:
        if fixture is not None and fixture not in FIXTURES:
            raise ValueError(f"unknown fixture '{fixture}', expected one of {sorted(FIXTURES)}")
        return fixture

    @field_validator("grid")
    @classmethod
    def _check_grid(cls, grid: list[float] | None) -> list[float] | None:
        if grid is not None and any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError(f"grid must be strictly increasing, got {grid}")
        return grid

    @field_validator("system", mode="before")
    @classmethod
    def _load_system_file(cls, value: Any) -> Any:
        # a string names a YAML file holding the system
        if isinstance(value, (str, Path)):
            return _load_yaml(Path(value))
        return value

    @model_validator(mode="after")
    def _check_sources(self) -> "ExperimentConfig":
        if self.vf_spec is not None:
            if self.vector_field is not None:
                raise ValueError("give either vector_field or vf_spec, not both")
            self.vector_field = parse_vector_field(self.vf_spec)
            self.vf_spec = None

        if self.command in SYSTEM_COMMANDS and (self.fixture is None) == (self.system is None):
            raise ValueError(f"'{self.command}' needs exactly one of fixture or system")
        if self.command in SDE_COMMANDS and self.vector_field is None:
            raise ValueError(f"'{self.command}' needs a vector field")
        if self.command == Command.STAIRCASE and not self.grid:
            raise ValueError("'staircase' needs a grid")
        return self

    @property
    def params(self) -> LiftParams:
        return LiftParams(q=self.q, alpha=self.alpha)

    @property
    def target(self) -> LiftParams:
        return LiftParams(
            q=self.q if self.q_prime is None else self.q_prime,
            alpha=self.alpha if self.alpha_prime is None else self.alpha_prime,
        )

    @property
    def effective_seed(self) -> int:
        if self.seed is not None:
            return self.seed
        if self.system is not None:
            return self.system.seed
        return settings.DEFAULT_SEED

    @property
    def output_path(self) -> Path:
        return self.out or settings.OUTPUT_DIR / f"{self.command.value}.{self.format.value}"

    def resolve_system(self) -> RandomSystem:
        """The configured random system, with the experiment seed taking precedence over the system's own."""
        if self.fixture == "example1" and self.start is not None:
            return build_example1(start=self.start, seed=self.effective_seed)
        if self.fixture is not None:
            return build_fixture(self.fixture, seed=self.effective_seed)
        return self.system.model_copy(update={"seed": self.effective_seed})


def load_experiment_config(path: Path | None, overrides: dict[str, Any] | None = None) -> ExperimentConfig:
    """
    Build an experiment configuration from an optional YAML file and overrides.

    Args:
        path: YAML file with ExperimentConfig fields, or None.
        overrides: Values that replace the file's; None entries are ignored.

    Returns:
        The validated configuration.
    """
    data = dict(_load_yaml(path) or {}) if path is not None else {}
    if path is not None:
        logger.debug(f"Loaded experiment configuration from {path}")
    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    return ExperimentConfig.model_validate(data)
