import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from rotation_toolkit.circle.arithmetic import cover, unit_increment
from rotation_toolkit.circle.lifts import lift_shift
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import EstimateReport, OrbitTrace
from rotation_toolkit.domain.types import Estimator
from rotation_toolkit.estimators.statistics import batch_means_se
from rotation_toolkit.homeo.families import NorthSouthFlow
from rotation_toolkit.homeo.operations import eval_lift
from rotation_toolkit.systems.models import FiniteCyclic, RandomSystem


class OrbitPass(BaseModel):
    """One pass along the skew orbit from s0.

    ``increments`` are the [0, 1)-deviations of the discontinuous lift;
    ``deviations`` are the (q, alpha)-deviations at the same visited points,
    present when lift parameters were supplied.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    increments : np.ndarray
    gammas : list[float]
    deviations : np.ndarray | None = None


def _closed_form_flow(system: RandomSystem) -> NorthSouthFlow | None:
    # a single North-South flow is iterated in its conjugate coordinate
    model = system.model
    if isinstance(model, FiniteCyclic) and len(model.maps) == 1 and isinstance(model.maps[0], NorthSouthFlow):
        return model.maps[0]
    return None


def orbit_pass(system: RandomSystem, s0: float, n: int, params: LiftParams | None = None) -> OrbitPass:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= s0 < 1.0:
        raise ValueError(f"s0 must lie in [0, 1), got {s0}")

    flow = _closed_form_flow(system)
    if flow is not None and params is None:
        increments = flow.orbit_increments(s0, n)
        gammas = (s0 + np.concatenate(([0.0], np.cumsum(increments)))).tolist()
        return OrbitPass(increments=increments, gammas=gammas)

    increments = np.empty(n)
    deviations = np.empty(n) if params is not None else None
    gammas = [s0]
    gamma = s0
    s = s0
    for i, f in enumerate(system.iter_maps(n)):
        image = eval_lift(f, s)
        increment = unit_increment(image - s)
        increments[i] = increment
        if deviations is not None:
            deviations[i] = image + lift_shift(f, params) - s
        gamma += increment
        gammas.append(gamma)
        s = cover(image)
    return OrbitPass(increments=increments, gammas=gammas, deviations=deviations)


def orbit_rotation(system: RandomSystem, s0: float, n: int) -> tuple[EstimateReport, OrbitTrace]:
    """
    Rotation number of the random orbit starting at s0.

    Args:
        system: The random system.
        s0: Initial angle gamma_0 in [0, 1).
        n: Number of steps.

    Returns:
        The report with value (gamma_n - gamma_0) / n and the trace of gammas.
    """
    orbit = orbit_pass(system, s0, n)
    value = (orbit.gammas[-1] - s0) / n

    logger.debug(f"OR_{{{s0}}} = {value} after {n} steps (seed {system.seed})")

    report = EstimateReport(
        estimator=Estimator.ORBIT,
        value=value,
        n=n,
        se_proxy=batch_means_se(orbit.increments),
        s0=s0,
        seed=system.seed,
    )
    return report, OrbitTrace(gammas=orbit.gammas)
