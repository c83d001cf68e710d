from rotation_toolkit.circle.arithmetic import cover
from rotation_toolkit.homeo.base import BaseCircleMap
from rotation_toolkit.homeo.operations import eval_lift
from rotation_toolkit.systems.models import FiniteCyclic, RandomSystem, SkewState


def sample_map(system: RandomSystem, step: int) -> BaseCircleMap:
    """
    The map applied at base time ``step``.

    Args:
        system: The random system.
        step: Non-negative base time.

    Returns:
        maps[(start + step) mod m] for cyclic bases, the step-th draw of the
        seeded map stream for i.i.d. models.
    """
    if step < 0:
        raise ValueError(f"step must be non-negative, got {step}")
    return system.sample_map(step)


def _base_index(system: RandomSystem, step: int) -> int:
    if isinstance(system.model, FiniteCyclic):
        return (system.model.start + step) % len(system.model.maps)
    return step


def iterate_skew(system: RandomSystem, s0: float, n: int) -> list[SkewState]:
    """
    Orbit of the skew product Theta(omega, s) = (theta omega, f(omega, s)).

    Args:
        system: The random system.
        s0: Initial angle in [0, 1).
        n: Number of steps, at least 1.

    Returns:
        The n + 1 states Theta^i(omega, s0), i = 0..n.

    Raises:
        InvalidMapError: If a map along the orbit cannot be evaluated.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")

    states = [SkewState(base_index=_base_index(system, 0), angle=s0)]
    s = s0
    for step, f in enumerate(system.iter_maps(n), start=1):
        s = cover(eval_lift(f, s))
        states.append(SkewState(base_index=_base_index(system, step), angle=s))
    return states
