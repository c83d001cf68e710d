from .arithmetic import ceil_half_open, cover, floor_half_open, unit_increment
from .lifts import Deviation, deviation_at, lift_shift, normalize_lift, shift_params

__all__ = [
    "Deviation",
    "ceil_half_open",
    "cover",
    "deviation_at",
    "floor_half_open",
    "lift_shift",
    "normalize_lift",
    "shift_params",
    "unit_increment",
]
