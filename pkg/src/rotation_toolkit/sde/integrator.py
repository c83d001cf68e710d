import math

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, PositiveFloat

from rotation_toolkit.circle.arithmetic import ceil_half_open
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.types import Stream
from rotation_toolkit.errors import ConfigurationError
from rotation_toolkit.sde.brownian import BrownianStream
from rotation_toolkit.sde.fields import ConstantField, VectorFieldSet
from rotation_toolkit.systems.rng import stream_generator


def steps_per_segment(delta_t: float, dt_internal: float) -> int:
    """Number of internal steps in one sampling interval; delta_t must be a multiple of dt_internal."""
    ratio = delta_t / dt_internal
    steps = round(ratio)
    if steps < 1 or abs(ratio - steps) > 1e-9 * max(1.0, ratio):
        raise ConfigurationError(
            f"delta_t={delta_t} is not an integer multiple of the internal step {dt_internal}"
        )
    return steps


def _is_constant(vf: VectorFieldSet) -> bool:
    return all(isinstance(field, ConstantField) for field in (vf.drift, *vf.diffusion))


def _heun_increment(vf: VectorFieldSet, x: np.ndarray, dt: float, dw: np.ndarray) -> np.ndarray:
    total = vf.drift(x) * dt
    for j, field in enumerate(vf.diffusion):
        total = total + field(x) * dw[..., j]
    return total


def heun_flow(vf: VectorFieldSet, x: np.ndarray | float, dt: float, increments: np.ndarray) -> np.ndarray:
    """
    Stratonovich Heun flow applied to many start points at once.

    Args:
        vf: Drift and diffusion fields.
        x: Start points; any shape broadcastable against increments[..., 0, 0].
        dt: Internal step.
        increments: Brownian increments of shape (..., steps, m).

    Returns:
        The points after all internal steps.
    """
    x = np.array(x, dtype=float)
    increments = np.asarray(increments, dtype=float)
    for j in range(increments.shape[-2]):
        dw = increments[..., j, :]
        predictor_step = _heun_increment(vf, x, dt, dw)
        x = x + 0.5 * (predictor_step + _heun_increment(vf, x + predictor_step, dt, dw))
    return x


def heun_path(vf: VectorFieldSet, x0: float, dt: float, increments: np.ndarray) -> np.ndarray:
    """
    One lifted trajectory on the internal grid.

    Args:
        vf: Drift and diffusion fields.
        x0: Start point in R.
        dt: Internal step.
        increments: Brownian increments of shape (steps, m).

    Returns:
        The steps + 1 values x0, x_1, ..., x_steps.
    """
    increments = np.asarray(increments, dtype=float)
    if _is_constant(vf):
        # Heun is exact for constant coefficients
        noise = sum((field.value * increments[:, j] for j, field in enumerate(vf.diffusion)), np.zeros(len(increments)))
        return x0 + np.concatenate(([0.0], np.cumsum(vf.drift.value * dt + noise)))

    drift = vf.drift.scalar
    diffusion = [field.scalar for field in vf.diffusion]
    x = float(x0)
    path = [x]
    if not diffusion:
        for _ in range(len(increments)):
            f = drift(x) * dt
            x = x + 0.5 * (f + drift(x + f) * dt)
            path.append(x)
    elif len(diffusion) == 1:
        g = diffusion[0]
        for w in increments[:, 0].tolist():
            f = drift(x) * dt + g(x) * w
            p = x + f
            x = x + 0.5 * (f + drift(p) * dt + g(p) * w)
            path.append(x)
    else:
        for dw in increments.tolist():
            f = drift(x) * dt + math.fsum(g(x) * w for g, w in zip(diffusion, dw))
            p = x + f
            x = x + 0.5 * (f + drift(p) * dt + math.fsum(g(p) * w for g, w in zip(diffusion, dw)))
            path.append(x)
    return np.array(path)


class FlowSegment(BaseModel):
    """Lifted time-delta_t flow psi for one fixed set of Brownian increments."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vf : VectorFieldSet
    delta_t : PositiveFloat
    dt : PositiveFloat
    increments : np.ndarray

    def psi_at(self, x: np.ndarray | float) -> np.ndarray:
        return heun_flow(self.vf, x, self.dt, self.increments)


def integrate_segment(
    vf: VectorFieldSet,
    stream: BrownianStream,
    x0: float,
    delta_t: float,
    generator: np.random.Generator | None = None,
) -> tuple[float, FlowSegment]:
    """
    Integrate the lifted Stratonovich equation over one sampling interval.

    Args:
        vf: Drift and diffusion fields.
        stream: Brownian stream; its dimension must match vf.
        x0: Start point in R.
        delta_t: Sampling interval, a multiple of stream.dt_internal.
        generator: Generator to advance; a fresh one from the stream when None.

    Returns:
        The end point and the segment, which replays the same increments from any start.

    Raises:
        ConfigurationError: If delta_t is not a multiple of the internal step
            or the stream dimension does not match.
    """
    if stream.dimension != vf.dimension:
        raise ConfigurationError(f"stream has dimension {stream.dimension}, vector field needs {vf.dimension}")
    steps = steps_per_segment(delta_t, stream.dt_internal)
    generator = generator if generator is not None else stream.generator()
    segment = FlowSegment(
        vf=vf,
        delta_t=delta_t,
        dt=stream.dt_internal,
        increments=stream.increments(generator, steps),
    )
    return float(segment.psi_at(x0)), segment


def crossing_count(segment: FlowSegment, params: LiftParams) -> int:
    """N = ceil(alpha - psi(q)), the integer putting psi(q) + N into [alpha, alpha + 1)."""
    return ceil_half_open(params.alpha - float(segment.psi_at(params.q)))


class SegmentAudit(BaseModel):
    model_config = ConfigDict(frozen=True)

    pairs : int
    monotone : bool
    equivariance_error : float


def audit_segment(segment: FlowSegment, pairs: int = 1000, seed: int = 0) -> SegmentAudit:
    """Order preservation on random pairs x < y and the defect of psi(x + 1) = psi(x) + 1."""
    generator = stream_generator(seed, Stream.MEASURE)
    points = np.sort(generator.uniform(-1.0, 2.0, size=(pairs, 2)), axis=1)
    distinct = points[:, 0] < points[:, 1]
    images = segment.psi_at(points[distinct])

    xs = points[:, 0]
    defect = segment.psi_at(xs + 1.0) - segment.psi_at(xs) - 1.0

    audit = SegmentAudit(
        pairs=int(distinct.sum()),
        monotone=bool(np.all(images[:, 0] < images[:, 1])),
        equivariance_error=float(np.max(np.abs(defect))),
    )
    if not audit.monotone:
        logger.warning(f"Flow segment of length {segment.delta_t} reverses the order of some points")
    return audit
