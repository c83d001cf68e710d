import math
from abc import ABC, abstractmethod
from functools import cached_property

from pydantic import BaseModel, ConfigDict


class BaseCircleMap(BaseModel, ABC):
    """Base abstract class for orientation-preserving circle homeomorphisms.

    Subclasses provide one lift of the map; the canonical lift F0 is that
    lift translated by the integer that puts F0(0) in [0, 1).
    """
    model_config = ConfigDict(frozen=True)

    @abstractmethod
    def raw_lift(self, x: float) -> float:
        """
        Evaluate some lift of the map at x.

        Args:
            x: Point of the covering space.

        Returns:
            The lift value; any integer normalization is allowed.
        """
        pass

    @cached_property
    def canonical_shift(self) -> int:
        return -math.floor(self.raw_lift(0.0))

    def lift(self, x: float) -> float:
        """Canonical lift F0(x)."""
        return self.raw_lift(x) + self.canonical_shift
