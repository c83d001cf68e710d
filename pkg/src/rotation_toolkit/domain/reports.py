import math
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator

from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.types import Estimator

ROW_COLUMNS = ["estimator", "value", "n", "se_proxy", "q", "alpha", "s0", "seed"]


class EstimateReport(BaseModel):
    """A rotation-number estimate with its run parameters."""
    model_config = ConfigDict(frozen=True)

    estimator : Estimator
    value : float
    n : int
    se_proxy : float
    params : LiftParams | None = None
    s0 : float | None = None
    seed : int | None = None
    extras : dict[str, float] = Field(default_factory=dict)

    def as_row(self) -> dict[str, Any]:
        return {
            "estimator": self.estimator.value,
            "value": self.value,
            "n": self.n,
            "se_proxy": self.se_proxy,
            "q": self.params.q if self.params else None,
            "alpha": self.params.alpha if self.params else None,
            "s0": self.s0,
            "seed": self.seed,
        }


class OrbitTrace(BaseModel):
    """Increasing lifted angles gamma_0 <= gamma_1 <= ... of one random orbit."""
    model_config = ConfigDict(frozen=True)

    gammas : list[float]

    @field_validator("gammas")
    @classmethod
    def _check_monotone(cls, gammas: list[float]) -> list[float]:
        if not gammas or not 0.0 <= gammas[0] < 1.0:
            raise ValueError("gamma_0 must lie in [0, 1)")
        # round-off of the running sum grows with |gamma|
        steps = np.diff(gammas)
        slack = 8e-15 * max(1.0, abs(gammas[-1]))
        if np.any(steps < -slack) or np.any(steps >= 1.0 + slack):
            raise ValueError("increments of gamma must lie in [0, 1)")
        return gammas


class EmpiricalMeasure(BaseModel):
    """Histogram measure on [0, 1) with equal cells."""
    model_config = ConfigDict(frozen=True)

    bins : PositiveInt
    weights : tuple[float, ...]

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, weights: tuple[float, ...]) -> tuple[float, ...]:
        if any(w < 0.0 for w in weights):
            raise ValueError("weights must be non-negative")
        if abs(math.fsum(weights) - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {math.fsum(weights)}, expected 1")
        return weights

    @property
    def centers(self) -> np.ndarray:
        return (np.arange(self.bins) + 0.5) / self.bins

    def integrate(self, values: np.ndarray) -> float:
        """Integral of a function given by its values at the cell centers."""
        return float(np.dot(self.weights, values))

    def sample(self, generator: np.random.Generator, size: int) -> np.ndarray:
        cells = generator.choice(self.bins, size=size, p=np.asarray(self.weights))
        return (cells + generator.random(size)) / self.bins


class IdentityCheck(BaseModel):
    """Both sides of an identity between estimated quantities."""
    model_config = ConfigDict(frozen=True)

    lhs : float
    rhs : float
    se_lhs : float
    se_rhs : float
    extras : dict[str, float] = Field(default_factory=dict)

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def combined_se(self) -> float:
        return math.hypot(self.se_lhs, self.se_rhs)

    def as_row(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "se_lhs": self.se_lhs,
            "se_rhs": self.se_rhs,
        }


class NonuniformTrace(BaseModel):
    """Lift orbits of the uniform lift F and of G = F + N, with the offsets N_i."""
    model_config = ConfigDict(frozen=True)

    uniform : list[float]
    shifted : list[float]
    offsets : list[int]


class CrossingStats(BaseModel):
    """Estimated P(A_i), P(B_j) and the staircase levels k, l."""
    model_config = ConfigDict(frozen=True)

    probs_a : dict[int, float]
    probs_b : dict[int, float]
    k : int
    l : int
    n_samples : int
    rare_k : bool = False
    rare_l : bool = False

    @property
    def prob_a_k(self) -> float:
        return self.probs_a.get(self.k, 0.0)

    @property
    def prob_b_l(self) -> float:
        return self.probs_b.get(self.l, 0.0)


class StaircaseRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    grid_value : float
    level : int
    prob : float

    def as_row(self) -> dict[str, Any]:
        return {"grid_value": self.grid_value, "k": self.level, "prob": self.prob}


class SamplingRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    delta_t : float
    rho_rescaled : float
    se : float
    crossing_diag : float

    def as_row(self) -> dict[str, Any]:
        return self.model_dump()


class SamplingLadder(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows : list[SamplingRow]
    crossing_slope : float | None = None


class CounterexampleRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    s0 : float
    orbit_rotation : float

    def as_row(self) -> dict[str, Any]:
        return {"s0": self.s0, "OR": self.orbit_rotation}
