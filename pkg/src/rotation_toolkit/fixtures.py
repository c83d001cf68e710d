from pathlib import Path
from typing import Callable

from loguru import logger

from rotation_toolkit.errors import FixtureError
from rotation_toolkit.homeo.families import NorthSouthFlow, PiecewiseLinear, Rotation
from rotation_toolkit.homeo.operations import eval_lift, validate
from rotation_toolkit.homeo.storage import write_piecewise_linear
from rotation_toolkit.settings import settings
from rotation_toolkit.systems.models import (
    FiniteCyclic,
    FiniteIID,
    ParametricIID,
    PerturbedRotationFamily,
    RandomSystem,
)
from rotation_toolkit.systems.skew import iterate_skew

# (x, f(x)) constraints of the four maps of the cyclic example; every map fixes 0.
EXAMPLE1_CONSTRAINTS = (
    ("1/8", "3/8"),
    ("3/8", "5/8"),
    ("5/8", "7/8"),
    ("7/8", "1/8"),
)
EXAMPLE1_PERIODIC_ORBIT = (0.125, 0.375, 0.625, 0.875)


def _check_example1(system: RandomSystem) -> None:
    for i, f in enumerate(system.model.maps, start=1):
        if not validate(f, grid_size=512):
            raise FixtureError(f"f{i} is not an orientation-preserving homeomorphism")
        if eval_lift(f, 0.0) != 0.0:
            raise FixtureError(f"f{i} does not fix 0")
        x, y = f.points[-1]
        if eval_lift(f, x) % 1.0 != y:
            raise FixtureError(f"f{i} misses its constraint at {x}")

    if system.model.start == 0:
        angles = tuple(state.angle for state in iterate_skew(system, 0.125, 4))
        if angles != (*EXAMPLE1_PERIODIC_ORBIT, 0.125):
            raise FixtureError(f"orbit of 1/8 is not the expected 4-cycle: {angles}")


def build_example1(start: int = 0, seed: int = settings.DEFAULT_SEED) -> RandomSystem:
    """
    Four piecewise-linear maps applied cyclically, all fixing 0.

    f1(1/8) = 3/8, f2(3/8) = 5/8, f3(5/8) = 7/8, f4(7/8) = 1/8. Each map is
    linear on [0, x] and on [x, 1], so slopes stay in [1/7, 7].

    Args:
        start: 0-based index of the first map.
        seed: Seed of the system; unused by the cyclic base but recorded in reports.

    Returns:
        The FiniteCyclic system, checked at construction.

    Raises:
        FixtureError: If a map or the periodic orbit fails its check.
    """
    maps = tuple(PiecewiseLinear(points=[("0", "0"), (x, y)]) for x, y in EXAMPLE1_CONSTRAINTS)
    system = RandomSystem(model=FiniteCyclic(maps=maps, start=start), seed=seed)
    _check_example1(system)
    return system


def build_intro(theta: float = 0.5, p: float = 0.3, seed: int = settings.DEFAULT_SEED) -> RandomSystem:
    """Identity with probability 1 - p, rotation by theta with probability p."""
    model = FiniteIID(maps=(Rotation(theta=0.0), Rotation(theta=theta)), probs=(1.0 - p, p))
    return RandomSystem(model=model, seed=seed)


def build_north_south(delta_t: float = 0.1, seed: int = settings.DEFAULT_SEED) -> RandomSystem:
    return RandomSystem(model=FiniteCyclic(maps=(NorthSouthFlow(delta_t=delta_t),)), seed=seed)


def build_perturbed_family(
    c0: float = 0.3,
    width: float = 0.05,
    epsilon: float = 0.1,
    seed: int = settings.DEFAULT_SEED,
) -> RandomSystem:
    family = PerturbedRotationFamily(c0=c0, width=width, epsilon=epsilon)
    return RandomSystem(model=ParametricIID(family=family), seed=seed)


FIXTURES: dict[str, Callable[..., RandomSystem]] = {
    "example1": build_example1,
    "intro": build_intro,
    "north-south": build_north_south,
    "perturbed": build_perturbed_family,
}


def build_fixture(name: str, seed: int | None = None) -> RandomSystem:
    try:
        builder = FIXTURES[name]
    except KeyError as e:
        raise FixtureError(f"unknown fixture '{name}', expected one of {sorted(FIXTURES)}") from e
    return builder() if seed is None else builder(seed=seed)


def export_fixture_maps(system: RandomSystem, directory: Path) -> list[Path]:
    """Write every piecewise-linear map of a finite system to ``directory/f<i>.yaml``."""
    if not hasattr(system.model, "maps"):
        raise FixtureError("only finite systems carry an exportable list of maps")

    paths = []
    for i, f in enumerate(system.model.maps, start=1):
        if not isinstance(f, PiecewiseLinear):
            logger.warning(f"Skipping f{i}: {type(f).__name__} has no piecewise-linear file form")
            continue
        path = directory / f"f{i}.yaml"
        write_piecewise_linear(f, path)
        paths.append(path)

    logger.info(f"Exported {len(paths)} maps to {directory}")
    return paths
