import bisect
import math
from fractions import Fraction
from functools import cached_property
from typing import Annotated, Literal

import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, field_validator

from rotation_toolkit.errors import InvalidMapError
from rotation_toolkit.homeo.base import BaseCircleMap
from rotation_toolkit.sde.fields import VectorField

TWO_PI = 2.0 * math.pi


class Rotation(BaseCircleMap):
    """Rigid rotation x -> x + theta."""
    kind : Literal["rotation"] = "rotation"
    theta : float = Field(default=0.0, allow_inf_nan=False)

    def raw_lift(self, x: float) -> float:
        return x + self.theta


def _exact(value: object) -> float:
    # "3/8", "0.125" and plain numbers all go through Fraction
    if isinstance(value, str):
        return float(Fraction(value.strip()))
    return float(value)


class PiecewiseLinear(BaseCircleMap):
    """Monotone linear interpolation through (x_i, y_i) knots, extended by F(x + 1) = F(x) + 1.

    The segment after the last knot joins (x_last, y_last) to (x_0 + 1, y_0 + 1).
    Construction only checks the knot abscissae; monotonicity of the images is
    audited by ``validate``.
    """
    kind : Literal["piecewise_linear"] = "piecewise_linear"
    points : tuple[tuple[float, float], ...]
    winding : int = 0

    @field_validator("points", mode="before")
    @classmethod
    def _parse_points(cls, value: object) -> tuple[tuple[float, float], ...]:
        return tuple((_exact(x), _exact(y)) for x, y in value)

    @field_validator("points")
    @classmethod
    def _check_abscissae(cls, points: tuple[tuple[float, float], ...]) -> tuple[tuple[float, float], ...]:
        if not points:
            raise ValueError("a piecewise-linear map needs at least one knot")
        xs = [x for x, _ in points]
        if xs[0] < 0.0 or xs[-1] >= 1.0:
            raise ValueError("knot abscissae must lie in [0, 1)")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("knot abscissae must be strictly increasing")
        if not all(math.isfinite(y) for _, y in points):
            raise ValueError("knot images must be finite")
        return points

    @cached_property
    def knots(self) -> tuple[list[float], list[float]]:
        xs = [x for x, _ in self.points]
        ys = [y for _, y in self.points]
        return [xs[-1] - 1.0, *xs, xs[0] + 1.0], [ys[-1] - 1.0, *ys, ys[0] + 1.0]

    def raw_lift(self, x: float) -> float:
        xs, ys = self.knots
        m = math.floor(x)
        r = x - m
        j = bisect.bisect_right(xs, r) - 1
        t = (r - xs[j]) / (xs[j + 1] - xs[j])
        return ys[j] + (ys[j + 1] - ys[j]) * t + m + self.winding


class Projective(BaseCircleMap):
    """Action v -> Av/|Av| of a 2x2 matrix on unit vectors, as a map of angles.

    The lift uses A = Q R with Q a rotation and R upper triangular with positive
    diagonal: R fixes the directions 0 and 1/2, so its angular displacement
    stays in (-1/2, 1/2), and Q adds a constant turn.
    """
    kind : Literal["projective"] = "projective"
    matrix : tuple[tuple[float, float], tuple[float, float]]

    @property
    def determinant(self) -> float:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @cached_property
    def qr_factors(self) -> tuple[float, float, float, float]:
        if not self.determinant > 0.0:
            raise InvalidMapError(f"Projective matrix has non-positive determinant {self.determinant}")
        q, r = np.linalg.qr(np.array(self.matrix, dtype=float))
        signs = np.sign(np.diag(r))
        q = q * signs
        r = signs[:, None] * r
        turn = math.atan2(q[1, 0], q[0, 0]) / TWO_PI
        return float(r[0, 0]), float(r[0, 1]), float(r[1, 1]), turn

    def raw_lift(self, x: float) -> float:
        a, b, d, turn = self.qr_factors
        angle = TWO_PI * x
        c, s = math.cos(angle), math.sin(angle)
        image = math.atan2(d * s, a * c + b * s)
        displacement = math.remainder(image - angle, TWO_PI)
        return x + displacement / TWO_PI + turn


class PerturbedRotation(BaseCircleMap):
    """x -> x + c + epsilon*sin(2 pi x), a diffeomorphism while |2 pi epsilon| < 1."""
    kind : Literal["perturbed_rotation"] = "perturbed_rotation"
    c : float = Field(default=0.0, allow_inf_nan=False)
    epsilon : float = Field(default=0.0, allow_inf_nan=False)

    @field_validator("epsilon")
    @classmethod
    def _check_epsilon(cls, epsilon: float) -> float:
        if abs(TWO_PI * epsilon) >= 1.0:
            raise ValueError(f"|2*pi*epsilon| must be < 1, got epsilon={epsilon}")
        return epsilon

    def raw_lift(self, x: float) -> float:
        return x + self.c + self.epsilon * math.sin(TWO_PI * x)


class NorthSouthFlow(BaseCircleMap):
    """Time-delta_t flow of h(x) = -sin(2 pi x): sink at 0, source at 1/2.

    tan(pi x) decays like exp(-2 pi t) on each cell (k - 1/2, k + 1/2).
    """
    kind : Literal["north_south_flow"] = "north_south_flow"
    delta_t : PositiveFloat = 0.1

    @cached_property
    def contraction(self) -> float:
        return math.exp(-TWO_PI * self.delta_t)

    def raw_lift(self, x: float) -> float:
        k = math.floor(x + 0.5)
        r = x - k
        if r <= -0.5:
            return x
        return k + math.atan(math.tan(math.pi * r) * self.contraction) / math.pi

    def orbit_increments(self, s0: float, n: int) -> np.ndarray:
        """
        [0, 1)-increments of the first n steps of the orbit of s0.

        The orbit is iterated in u = log|tan(pi r)|, r the signed distance to the
        sink, where one step is exactly u -> u - 2 pi delta_t. An orbit keeps its
        side of the sink after r underflows: increments stay 1 - eps from above
        and eps from below.

        Args:
            s0: Initial angle in [0, 1).
            n: Number of steps.

        Returns:
            Array of n increments; all zero at the sink and at the source.
        """
        r0 = s0 - math.floor(s0 + 0.5)
        if r0 == 0.0 or r0 == -0.5:
            return np.zeros(n)
        u = math.log(math.tan(math.pi * abs(r0))) - TWO_PI * self.delta_t * np.arange(n + 1)
        distance = np.arctan(np.exp(u)) / math.pi
        approach = distance[:-1] - distance[1:]
        if r0 < 0.0:
            return approach
        increments = 1.0 - approach
        return np.where(increments >= 1.0, np.nextafter(1.0, 0.0), increments)


class DeterministicFlow(BaseCircleMap):
    """Time-delta_t flow of dx = h(x) dt, integrated with Heun's method."""
    kind : Literal["deterministic_flow"] = "deterministic_flow"
    drift : VectorField
    delta_t : PositiveFloat = 0.1
    substeps : PositiveInt = 20

    def raw_lift(self, x: float) -> float:
        h = self.delta_t / self.substeps
        field = self.drift.scalar
        for _ in range(self.substeps):
            f = field(x)
            predictor = x + f * h
            x = x + 0.5 * (f + field(predictor)) * h
        return x


class Composite(BaseCircleMap):
    """outer o inner; the canonical lifts compose to a lift of the composition."""
    kind : Literal["composite"] = "composite"
    outer : "CircleMap"
    inner : "CircleMap"

    def raw_lift(self, x: float) -> float:
        return self.outer.lift(self.inner.lift(x))


CircleMap = Annotated[
    Rotation | PiecewiseLinear | Projective | PerturbedRotation | NorthSouthFlow | DeterministicFlow | Composite,
    Field(discriminator="kind"),
]

Composite.model_rebuild()
