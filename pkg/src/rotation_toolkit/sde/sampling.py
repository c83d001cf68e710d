import numpy as np
from loguru import logger
from tqdm import tqdm

from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import CounterexampleRow, SamplingLadder, SamplingRow
from rotation_toolkit.errors import ConfigurationError, HypothesisError
from rotation_toolkit.estimators.orbit import orbit_rotation
from rotation_toolkit.estimators.statistics import batch_means_se
from rotation_toolkit.homeo.families import DeterministicFlow, NorthSouthFlow
from rotation_toolkit.sde.brownian import BrownianStream
from rotation_toolkit.sde.fields import VectorFieldSet
from rotation_toolkit.sde.integrator import heun_flow, heun_path
from rotation_toolkit.settings import settings
from rotation_toolkit.systems.models import FiniteCyclic, RandomSystem
from rotation_toolkit.systems.rng import derive_seed

SAMPLING_HYPOTHESIS = "q - 1 < alpha < q"

_CHUNK = 1 << 14


def _sampling_rung(
    vf: VectorFieldSet,
    params: LiftParams,
    delta_t: float,
    n_steps: int,
    seed: int,
    substeps: int,
    x0: float,
) -> SamplingRow:
    dt = delta_t / substeps
    stream = BrownianStream(seed=seed, dt_internal=dt, dimension=vf.dimension)
    generator = stream.generator()

    deviations = np.empty(n_steps)
    crossings = np.empty(n_steps)
    x = x0
    done = 0
    while done < n_steps:
        count = min(_CHUNK, n_steps - done)
        increments = stream.increments(generator, substeps, count=count)
        # orbit points: one trajectory sampled every delta_t
        path = heun_path(vf, x, dt, increments.reshape(count * substeps, vf.dimension))[::substeps]
        # anchors: every segment replayed from q with its own increments
        anchors = heun_flow(vf, np.full(count, params.q), dt, increments)
        n_cross = np.ceil(params.alpha - anchors - settings.BOUNDARY_TOLERANCE)
        deviations[done:done + count] = np.diff(path) + n_cross
        crossings[done:done + count] = np.abs(n_cross)
        x = float(path[-1])
        done += count

    return SamplingRow(
        delta_t=delta_t,
        rho_rescaled=float(deviations.mean()) / delta_t,
        se=batch_means_se(deviations) / delta_t,
        crossing_diag=float(crossings.mean()) / delta_t,
    )


def _crossing_slope(rows: list[SamplingRow]) -> float | None:
    usable = [row for row in rows if row.crossing_diag > 0.0]
    if len(usable) < 2:
        return None
    log_dt = np.log([row.delta_t for row in usable])
    log_diag = np.log([row.crossing_diag for row in usable])
    return float(np.polyfit(log_dt, log_diag, 1)[0])


def sampling_experiment(
    vf: VectorFieldSet,
    params: LiftParams,
    delta_t_list: list[float],
    n_steps: int,
    seed: int,
    substeps: int = settings.HEUN_SUBSTEPS,
    x0: float | None = None,
) -> SamplingLadder:
    """
    rho_{q,alpha} of the time-delta_t discretisation, rescaled by delta_t, along a ladder of intervals.

    Each rung integrates n_steps segments on its own Brownian stream. Per
    segment the flow is evaluated at the running orbit point and at q with the
    same increments; N = ceil(alpha - psi(q)) and the deviation is
    psi(x_i) - x_i + N.

    Args:
        vf: Drift and diffusion fields.
        params: Lift parameters, with q - 1 < alpha < q.
        delta_t_list: Strictly decreasing sampling intervals.
        n_steps: Segments per rung.
        seed: Experiment seed; each rung derives its own.
        substeps: Internal Heun steps per segment.
        x0: Start of the orbit; q when None.

    Returns:
        One row (delta_t, rho / delta_t, se, E|N| / delta_t) per rung and the
        fitted log-log slope of the crossing diagnostic, for information only.

    Raises:
        HypothesisError: If alpha is outside (q - 1, q).
        ConfigurationError: If the ladder is empty or not strictly decreasing.
    """
    if not params.sampling_valid:
        logger.warning(f"Refusing sampling experiment at q={params.q}, alpha={params.alpha}")
        raise HypothesisError(SAMPLING_HYPOTHESIS, f"got q={params.q}, alpha={params.alpha}")
    if not delta_t_list or any(dt <= 0.0 for dt in delta_t_list):
        raise ConfigurationError("the delta_t ladder must be a non-empty list of positive values")
    if any(b >= a for a, b in zip(delta_t_list, delta_t_list[1:])):
        raise ConfigurationError(f"the delta_t ladder must be strictly decreasing, got {delta_t_list}")
    if n_steps < 1:
        raise ConfigurationError(f"n_steps must be at least 1, got {n_steps}")

    start = params.q if x0 is None else x0
    rows = []
    for rung, delta_t in enumerate(tqdm(delta_t_list, desc="Sampling ladder")):
        row = _sampling_rung(vf, params, delta_t, n_steps, derive_seed(seed, rung), substeps, start)
        logger.debug(f"delta_t={delta_t}: rho/dt={row.rho_rescaled} (se {row.se}), E|N|/dt={row.crossing_diag}")
        rows.append(row)

    slope = _crossing_slope(rows)
    if slope is not None:
        logger.info(f"Crossing diagnostic log-log slope {slope:.3f} (informational)")
    return SamplingLadder(rows=rows, crossing_slope=slope)


def or_sampling_counterexample(
    delta_t: float,
    s0_list: list[float],
    n: int,
    vf: VectorFieldSet | None = None,
    substeps: int = settings.HEUN_SUBSTEPS,
) -> list[CounterexampleRow]:
    """
    Orbit rotation numbers of the time-delta_t map of a deterministic flow.

    Without a vector field the North-South flow of -sin(2 pi x) is used in
    closed form.

    Raises:
        ConfigurationError: If vf has non-zero diffusion.
    """
    if vf is None:
        flow = NorthSouthFlow(delta_t=delta_t)
    elif vf.is_deterministic:
        flow = DeterministicFlow(drift=vf.drift, delta_t=delta_t, substeps=substeps)
    else:
        raise ConfigurationError("the orbit-rotation counterexample needs a deterministic vector field")

    system = RandomSystem(model=FiniteCyclic(maps=(flow,)))
    rows = []
    for s0 in s0_list:
        report, _ = orbit_rotation(system, s0, n)
        rows.append(CounterexampleRow(s0=s0, orbit_rotation=report.value))
        logger.debug(f"OR_{{{s0}}} = {report.value} at delta_t={delta_t}")
    return rows
