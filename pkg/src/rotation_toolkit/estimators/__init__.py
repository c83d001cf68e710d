from .ergodic import ergodic_formula_check
from .orbit import orbit_pass, orbit_rotation
from .rotation import OffsetSampler, lift_orbit, nonuniform_orbit, rho_estimate, rho_nonuniform
from .statistics import batch_means_se, empirical_measure

__all__ = [
    "OffsetSampler",
    "batch_means_se",
    "empirical_measure",
    "ergodic_formula_check",
    "lift_orbit",
    "nonuniform_orbit",
    "orbit_pass",
    "orbit_rotation",
    "rho_estimate",
    "rho_nonuniform",
]
