from enum import IntEnum, StrEnum


class Estimator(StrEnum):
    RHO = "rho"
    RHO_NONUNIFORM = "rho_nonuniform"
    ORBIT = "orbit"
    SDE_ROT = "sde_rot"
    SDE_ROT_FORMULA = "sde_rot_formula"


class Command(StrEnum):
    RHO = "rho"
    ORBIT = "orbit"
    NONUNIFORM = "nonuniform"
    ERGODIC_CHECK = "ergodic-check"
    COMPARE = "compare"
    STAIRCASE = "staircase"
    COR33 = "cor33"
    SDE_ROT = "sde-rot"
    SAMPLING = "sampling"
    NS_COUNTEREXAMPLE = "ns-counterexample"


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"


class SweepAxis(StrEnum):
    Q = "q"
    ALPHA = "alpha"


class Stream(IntEnum):
    """Independent random streams derived from one experiment seed."""
    MAPS = 0
    OFFSETS = 1
    MEASURE = 2
    FRESH_MAPS = 3
    BROWNIAN = 4
