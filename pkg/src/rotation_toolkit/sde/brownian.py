import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat

from rotation_toolkit.domain.types import Stream
from rotation_toolkit.systems.rng import stream_generator


class BrownianStream(BaseModel):
    """Reproducible increments of an m-dimensional Brownian motion on a fixed internal step.

    The Wiener shift is realized by consuming one generator in order, so a
    replica is strictly sequential in time.
    """
    model_config = ConfigDict(frozen=True)

    seed : int = Field(ge=0, lt=2**64)
    dt_internal : PositiveFloat
    dimension : NonNegativeInt = 1

    def generator(self) -> np.random.Generator:
        return stream_generator(self.seed, Stream.BROWNIAN)

    def increments(self, generator: np.random.Generator, steps: int, count: int | None = None) -> np.ndarray:
        """Gaussian increments with variance dt_internal.

        Args:
            generator: The generator returned by ``generator()``, advanced in place.
            steps: Internal steps per segment.
            count: Number of consecutive segments; None for a single segment.

        Returns:
            Array of shape (steps, m), or (count, steps, m) when count is given.
        """
        shape = (steps, self.dimension) if count is None else (count, steps, self.dimension)
        return generator.standard_normal(shape) * math.sqrt(self.dt_internal)
