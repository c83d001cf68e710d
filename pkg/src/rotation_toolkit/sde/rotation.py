import numpy as np
from loguru import logger

from rotation_toolkit.domain.reports import EstimateReport
from rotation_toolkit.domain.types import Estimator
from rotation_toolkit.errors import ConfigurationError
from rotation_toolkit.estimators.statistics import batch_means_se, empirical_measure
from rotation_toolkit.sde.brownian import BrownianStream
from rotation_toolkit.sde.fields import VectorFieldSet
from rotation_toolkit.sde.integrator import heun_path, steps_per_segment


def _trajectory(vf: VectorFieldSet, stream: BrownianStream, x0: float, horizon: float) -> np.ndarray:
    if stream.dimension != vf.dimension:
        raise ConfigurationError(f"stream has dimension {stream.dimension}, vector field needs {vf.dimension}")
    steps = steps_per_segment(horizon, stream.dt_internal)
    increments = stream.increments(stream.generator(), steps)
    return heun_path(vf, x0, stream.dt_internal, increments)


def rot_continuous(vf: VectorFieldSet, stream: BrownianStream, x0: float, horizon: float) -> EstimateReport:
    """
    Average winding psi_T(x0) / T of one trajectory of the lifted flow.

    Args:
        vf: Drift and diffusion fields.
        stream: Brownian stream driving the trajectory.
        x0: Start point in R.
        horizon: Integration time T, a multiple of the internal step.

    Returns:
        The estimate with the last-half window (psi_T - psi_{T/2}) / (T/2) as extra ``tail``.
    """
    path = _trajectory(vf, stream, x0, horizon)
    value = (path[-1] - x0) / horizon
    half = len(path) // 2
    tail = (path[-1] - path[half]) / ((len(path) - 1 - half) * stream.dt_internal)

    logger.info(f"rot = {value} over T={horizon} (tail {tail})")
    return EstimateReport(
        estimator=Estimator.SDE_ROT,
        value=float(value),
        n=len(path) - 1,
        se_proxy=batch_means_se(np.diff(path)) / stream.dt_internal,
        seed=stream.seed,
        extras={"tail": float(tail), "horizon": horizon},
    )


def rot_formula_estimate(vf: VectorFieldSet, stream: BrownianStream, horizon: float, bins: int, x0: float = 0.0) -> float:
    """
    Integrate h0 + 1/2 sum hj' hj against the occupation measure of one trajectory.

    Args:
        vf: Drift and diffusion fields.
        stream: Brownian stream driving the trajectory.
        horizon: Integration time T.
        bins: Histogram cells on [0, 1).
        x0: Start point of the trajectory.

    Returns:
        The sum over cells of weight times the drift density at the cell center.
    """
    path = _trajectory(vf, stream, x0, horizon)
    angles = path - np.floor(path)
    angles[angles >= 1.0] = 0.0
    measure = empirical_measure(angles[1:], bins)
    value = measure.integrate(vf.drift_density(measure.centers))
    logger.debug(f"Formula estimate {value} from a {bins}-cell occupation measure")
    return value
