import math
from typing import Iterable

import numpy as np
from loguru import logger

from rotation_toolkit.errors import InvalidMapError
from rotation_toolkit.homeo.base import BaseCircleMap
from rotation_toolkit.homeo.families import Composite, Rotation


def eval_lift(f: BaseCircleMap, x: float) -> float:
    """
    Evaluate the canonical lift F0 of a circle map.

    Args:
        f: The circle map.
        x: Point of the covering space.

    Returns:
        F0(x), normalized so that F0(0) lies in [0, 1).

    Raises:
        InvalidMapError: If the map cannot be evaluated as a homeomorphism.
    """
    value = f.lift(x)
    if not math.isfinite(value):
        raise InvalidMapError(f"{type(f).__name__} produced a non-finite lift value at x={x}")
    return value


def eval_lift_grid(f: BaseCircleMap, xs: Iterable[float]) -> np.ndarray:
    return np.fromiter((eval_lift(f, float(x)) for x in xs), dtype=float)


def compose(g: BaseCircleMap, f: BaseCircleMap) -> BaseCircleMap:
    """
    Compose two circle maps, g after f.

    Args:
        g: Map applied second.
        f: Map applied first.

    Returns:
        A map whose canonical lift is G0 o F0 translated so its value at 0 lies in [0, 1).
    """
    if isinstance(g, Rotation) and isinstance(f, Rotation):
        return Rotation(theta=g.theta + f.theta)
    return Composite(outer=g, inner=f)


def validate(f: BaseCircleMap, grid_size: int, tol: float = 1e-9) -> bool:
    """Audit strict monotonicity and F(x + 1) = F(x) + 1 on a grid over two periods."""
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")

    xs = np.linspace(0.0, 2.0, 2 * grid_size, endpoint=False)
    try:
        values = eval_lift_grid(f, xs)
        shifted = eval_lift_grid(f, xs + 1.0)
    except (InvalidMapError, ArithmeticError) as e:
        logger.debug(f"Map {type(f).__name__} failed evaluation during validation: {e}")
        return False

    monotone = bool(np.all(np.diff(values) > 0.0))
    equivariant = bool(np.max(np.abs(shifted - values - 1.0)) <= tol)
    if not (monotone and equivariant):
        logger.debug(f"Map {type(f).__name__} rejected: monotone={monotone}, equivariant={equivariant}")
    return monotone and equivariant
