from .circle import Angle, LiftParams, LiftValue
from .reports import (
    CounterexampleRow,
    CrossingStats,
    EmpiricalMeasure,
    EstimateReport,
    IdentityCheck,
    NonuniformTrace,
    OrbitTrace,
    SamplingLadder,
    SamplingRow,
    StaircaseRow,
)
from .results import ExperimentResult, SummaryLine
from .types import Command, Estimator, OutputFormat, Stream, SweepAxis

__all__ = [
    "Angle",
    "Command",
    "CounterexampleRow",
    "CrossingStats",
    "EmpiricalMeasure",
    "EstimateReport",
    "Estimator",
    "ExperimentResult",
    "IdentityCheck",
    "LiftParams",
    "LiftValue",
    "NonuniformTrace",
    "OrbitTrace",
    "OutputFormat",
    "SamplingLadder",
    "SamplingRow",
    "StaircaseRow",
    "Stream",
    "SummaryLine",
    "SweepAxis",
]
