from .models import (
    FiniteCyclic,
    FiniteIID,
    ParametricIID,
    PerturbedRotationFamily,
    RandomSystem,
    SkewState,
    SystemModel,
)
from .skew import iterate_skew, sample_map

__all__ = [
    "FiniteCyclic",
    "FiniteIID",
    "ParametricIID",
    "PerturbedRotationFamily",
    "RandomSystem",
    "SkewState",
    "SystemModel",
    "iterate_skew",
    "sample_map",
]
