import numpy as np
from pydantic import BaseModel, ConfigDict

from rotation_toolkit.circle.arithmetic import ceil_half_open, cover
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.homeo.base import BaseCircleMap
from rotation_toolkit.homeo.families import CircleMap


class Deviation(BaseModel):
    """delta_{q,alpha} = F_{q,alpha} - Id, with F_{q,alpha} = F0 + shift."""
    model_config = ConfigDict(frozen=True)

    base_map : CircleMap
    shift : int

    def lift(self, x: float) -> float:
        return self.base_map.lift(x) + self.shift

    def evaluate(self, x: float) -> float:
        """delta(x), computed at the periodic representative cover(x)."""
        s = cover(x)
        return self.base_map.lift(s) + self.shift - s

    def amplitude(self, grid_size: int = 10_000) -> float:
        xs = np.linspace(0.0, 1.0, grid_size, endpoint=False)
        values = np.fromiter((self.evaluate(float(x)) for x in xs), dtype=float)
        return float(values.max() - values.min())


def lift_shift(f: BaseCircleMap, params: LiftParams) -> int:
    """The unique integer n with F0(q) + n in [alpha, alpha + 1)."""
    return ceil_half_open(params.alpha - f.lift(params.q))


def normalize_lift(f: BaseCircleMap, params: LiftParams) -> Deviation:
    """
    Select the (q, alpha)-lift of a circle map.

    Args:
        f: The circle map, represented by its canonical lift F0.
        params: Anchor q and window start alpha.

    Returns:
        The deviation of the unique lift F with F(q) in [alpha, alpha + 1).
    """
    return Deviation(base_map=f, shift=lift_shift(f, params))


def shift_params(params: LiftParams, k: int, l: int) -> LiftParams:
    """(q + k, alpha + l); the resulting deviation differs from the original by l - k."""
    return params.shifted(k, l)


def deviation_at(f: BaseCircleMap, params: LiftParams, x: float) -> float:
    s = cover(x)
    return f.lift(s) + lift_shift(f, params) - s
