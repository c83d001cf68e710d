import math

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from rotation_toolkit.circle.arithmetic import cover
from rotation_toolkit.circle.lifts import lift_shift
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import EstimateReport, NonuniformTrace
from rotation_toolkit.domain.types import Estimator, Stream
from rotation_toolkit.estimators.statistics import batch_means_se
from rotation_toolkit.homeo.operations import eval_lift
from rotation_toolkit.systems.models import RandomSystem
from rotation_toolkit.systems.rng import stream_generator


class OffsetSampler(BaseModel):
    """Integer offsets N_i drawn i.i.d. from a finite distribution."""
    model_config = ConfigDict(frozen=True)

    values : tuple[int, ...] = Field(min_length=1)
    probs : tuple[float, ...]

    @model_validator(mode="after")
    def _check_probs(self) -> "OffsetSampler":
        if len(self.values) != len(self.probs):
            raise ValueError(f"{len(self.values)} offsets but {len(self.probs)} probabilities")
        if any(p < 0.0 for p in self.probs) or abs(math.fsum(self.probs) - 1.0) > 1e-12:
            raise ValueError("offset probabilities must be non-negative and sum to 1")
        return self

    @property
    def mean(self) -> float:
        return math.fsum(v * p for v, p in zip(self.values, self.probs))

    def draw(self, generator: np.random.Generator, size: int) -> np.ndarray:
        return generator.choice(np.asarray(self.values, dtype=np.int64), size=size, p=np.asarray(self.probs))


class LiftOrbit(BaseModel):
    """Deviations and visited angles along one lift orbit."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    deviations : np.ndarray
    angles : np.ndarray
    endpoint : float


def lift_orbit(system: RandomSystem, params: LiftParams, x0: float, n: int) -> LiftOrbit:
    """Run the composed (q, alpha)-lifts from x0, recording each deviation and visited angle.

    The running lift value stays in R; deviations are evaluated at its
    periodic representative so they keep full precision when the orbit grows.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")

    deviations = np.empty(n)
    angles = np.empty(n)
    shifts: dict[int, int] = {}
    cache_shifts = system.is_finite
    x = x0
    for i, f in enumerate(system.iter_maps(n)):
        if cache_shifts:
            shift = shifts.get(id(f))
            if shift is None:
                shift = shifts[id(f)] = lift_shift(f, params)
        else:
            shift = lift_shift(f, params)
        s = cover(x)
        d = eval_lift(f, s) + shift - s
        deviations[i] = d
        angles[i] = s
        x += d
    return LiftOrbit(deviations=deviations, angles=angles, endpoint=x)


def rho_estimate(system: RandomSystem, params: LiftParams, x0: float, n: int) -> EstimateReport:
    """
    Estimate the (q, alpha)-rotation number by the telescoped Birkhoff sum.

    Args:
        system: The random system.
        params: Lift parameters (q, alpha).
        x0: Starting point of the lift orbit.
        n: Number of composed lifts.

    Returns:
        Report with value (1/n) * sum of deviations = (F^n(x0) - x0) / n.
    """
    orbit = lift_orbit(system, params, x0, n)
    value = float(orbit.deviations.sum()) / n

    logger.debug(f"rho_{{{params.q},{params.alpha}}} = {value} after {n} steps (seed {system.seed})")

    return EstimateReport(
        estimator=Estimator.RHO,
        value=value,
        n=n,
        se_proxy=batch_means_se(orbit.deviations),
        params=params,
        seed=system.seed,
        extras={"x0": x0, "endpoint": orbit.endpoint},
    )


def nonuniform_orbit(
    system: RandomSystem,
    params: LiftParams,
    offsets: OffsetSampler,
    x0: float,
    n: int,
) -> NonuniformTrace:
    """
    Paired lift orbits of F = F_{q,alpha} and of G = F + N on the same maps.

    Args:
        system: The random system.
        params: Lift parameters of the uniform lift F.
        offsets: Distribution of the integer offsets N_i.
        x0: Common starting point.
        n: Number of steps.

    Returns:
        Orbits F^i(x0), G^i(x0) for i = 0..n and the offsets drawn.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")

    drawn = offsets.draw(stream_generator(system.seed, Stream.OFFSETS), n).tolist()
    uniform = [x0]
    shifted = [x0]
    x, y = x0, x0
    for f, offset in zip(system.iter_maps(n), drawn):
        shift = lift_shift(f, params)
        s = cover(x)
        x += eval_lift(f, s) + shift - s
        t = cover(y)
        y += eval_lift(f, t) + shift - t + offset
        uniform.append(x)
        shifted.append(y)
    return NonuniformTrace(uniform=uniform, shifted=shifted, offsets=drawn)


def rho_nonuniform(
    system: RandomSystem,
    params: LiftParams,
    offsets: OffsetSampler,
    x0: float,
    n: int,
) -> EstimateReport:
    """Rotation number of the non-uniform lift G = F_{q,alpha} + N, equal to rho_{q,alpha} + E[N] in the limit."""
    trace = nonuniform_orbit(system, params, offsets, x0, n)
    increments = np.diff(trace.shifted)
    value = float(increments.sum()) / n
    offset_sum = float(sum(trace.offsets))

    return EstimateReport(
        estimator=Estimator.RHO_NONUNIFORM,
        value=value,
        n=n,
        se_proxy=batch_means_se(increments),
        params=params,
        seed=system.seed,
        extras={
            "uniform_value": (trace.uniform[-1] - x0) / n,
            "offset_mean": offset_sum / n,
            "telescoping_residual": trace.shifted[-1] - trace.uniform[-1] - offset_sum,
        },
    )
