from .crossings import crossing_stats, rotation_continuity_sweep, staircase_sweep
from .identities import verify_cor_3_3, verify_cor_3_3_origin, verify_prop_2_8

__all__ = [
    "crossing_stats",
    "rotation_continuity_sweep",
    "staircase_sweep",
    "verify_cor_3_3",
    "verify_cor_3_3_origin",
    "verify_prop_2_8",
]
