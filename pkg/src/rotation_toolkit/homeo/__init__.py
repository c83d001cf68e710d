from .base import BaseCircleMap
from .families import (
    CircleMap,
    Composite,
    DeterministicFlow,
    NorthSouthFlow,
    PerturbedRotation,
    PiecewiseLinear,
    Projective,
    Rotation,
)
from .operations import compose, eval_lift, eval_lift_grid, validate

__all__ = [
    "BaseCircleMap",
    "CircleMap",
    "Composite",
    "DeterministicFlow",
    "NorthSouthFlow",
    "PerturbedRotation",
    "PiecewiseLinear",
    "Projective",
    "Rotation",
    "compose",
    "eval_lift",
    "eval_lift_grid",
    "validate",
]
