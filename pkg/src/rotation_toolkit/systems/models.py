import math
from functools import cached_property
from typing import Annotated, Iterator, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, NonNegativeInt, model_validator

from rotation_toolkit.domain.circle import Angle
from rotation_toolkit.domain.types import Stream
from rotation_toolkit.homeo.base import BaseCircleMap
from rotation_toolkit.homeo.families import CircleMap, PerturbedRotation
from rotation_toolkit.settings import settings
from rotation_toolkit.systems.rng import derive_seed, stream_generator

_CHUNK = 1 << 16


class FiniteIID(BaseModel):
    """i.i.d. choice among finitely many maps."""
    model_config = ConfigDict(frozen=True)

    kind : Literal["finite_iid"] = "finite_iid"
    maps : tuple[CircleMap, ...] = Field(min_length=1)
    probs : tuple[NonNegativeFloat, ...]

    @model_validator(mode="after")
    def _check_probs(self) -> "FiniteIID":
        if len(self.probs) != len(self.maps):
            raise ValueError(f"{len(self.maps)} maps but {len(self.probs)} probabilities")
        if abs(math.fsum(self.probs) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(self.probs)}, expected 1")
        return self

    @cached_property
    def cumulative(self) -> np.ndarray:
        return np.cumsum(self.probs)

    def draw(self, uniforms: np.ndarray) -> list[BaseCircleMap]:
        indices = np.searchsorted(self.cumulative, uniforms, side="right")
        indices = np.minimum(indices, len(self.maps) - 1)
        return [self.maps[i] for i in indices.tolist()]


class FiniteCyclic(BaseModel):
    """Deterministic cyclic shift (1, 2, ..., m) over m maps with uniform P; start is 0-based."""
    model_config = ConfigDict(frozen=True)

    kind : Literal["finite_cyclic"] = "finite_cyclic"
    maps : tuple[CircleMap, ...] = Field(min_length=1)
    start : NonNegativeInt = 0

    def map_at(self, step: int) -> BaseCircleMap:
        return self.maps[(self.start + step) % len(self.maps)]


class PerturbedRotationFamily(BaseModel):
    """x -> x + c + epsilon*sin(2 pi x) with c ~ uniform(c0 - width, c0 + width)."""
    model_config = ConfigDict(frozen=True)

    kind : Literal["perturbed_rotation"] = "perturbed_rotation"
    c0 : float = Field(default=0.3, allow_inf_nan=False)
    width : NonNegativeFloat = 0.05
    epsilon : float = 0.1

    @model_validator(mode="after")
    def _check_epsilon(self) -> "PerturbedRotationFamily":
        # reuse the single-map validation once; draws skip it
        PerturbedRotation(c=self.c0, epsilon=self.epsilon)
        return self

    def draw(self, uniforms: np.ndarray) -> list[BaseCircleMap]:
        cs = self.c0 - self.width + 2.0 * self.width * uniforms
        return [PerturbedRotation.model_construct(c=c, epsilon=self.epsilon) for c in cs.tolist()]


class ParametricIID(BaseModel):
    """i.i.d. maps drawn from a parametric family driven by one uniform per step."""
    model_config = ConfigDict(frozen=True)

    kind : Literal["parametric_iid"] = "parametric_iid"
    family : PerturbedRotationFamily = Field(default_factory=PerturbedRotationFamily)

    def draw(self, uniforms: np.ndarray) -> list[BaseCircleMap]:
        return self.family.draw(uniforms)


SystemModel = Annotated[FiniteIID | FiniteCyclic | ParametricIID, Field(discriminator="kind")]


class RandomSystem(BaseModel):
    """Probability model over circle maps together with its base dynamics and seed."""
    model_config = ConfigDict(frozen=True)

    model : SystemModel
    seed : int = Field(default=settings.DEFAULT_SEED, ge=0, lt=2**64)

    @property
    def is_iid(self) -> bool:
        return not isinstance(self.model, FiniteCyclic)

    @property
    def is_finite(self) -> bool:
        return not isinstance(self.model, ParametricIID)

    def iter_maps(self, n: int, stream: Stream = Stream.MAPS) -> Iterator[BaseCircleMap]:
        """Yield the maps f(omega), f(theta omega), ..., f(theta^{n-1} omega)."""
        if isinstance(self.model, FiniteCyclic):
            for step in range(n):
                yield self.model.map_at(step)
            return

        generator = stream_generator(self.seed, stream)
        remaining = n
        while remaining > 0:
            size = min(_CHUNK, remaining)
            yield from self.model.draw(generator.random(size))
            remaining -= size

    def sample_map(self, step: int, stream: Stream = Stream.MAPS) -> BaseCircleMap:
        if isinstance(self.model, FiniteCyclic):
            return self.model.map_at(step)
        uniforms = stream_generator(self.seed, stream).random(step + 1)
        return self.model.draw(uniforms[step:])[0]

    def spawn(self, key: int) -> "RandomSystem":
        """Same model with an independent, reproducible seed."""
        return self.model_copy(update={"seed": derive_seed(self.seed, key)})


class SkewState(BaseModel):
    """Point (theta^i omega, s_i) of the skew product; base_index is i, or the map slot for cyclic bases."""
    model_config = ConfigDict(frozen=True)

    base_index : int
    angle : Angle
