import math

from rotation_toolkit.settings import settings

_TOL = settings.BOUNDARY_TOLERANCE
_BELOW_ONE = math.nextafter(1.0, 0.0)


def cover(x: float) -> float:
    """Project a lift value onto the circle, returned as its angle in [0, 1)."""
    angle = x - math.floor(x)
    # x slightly below an integer can round up to exactly 1.0
    return 0.0 if angle >= 1.0 else angle


def ceil_half_open(z: float, tol: float = _TOL) -> int:
    """The unique integer n with n in [z, z + 1).

    Values within ``tol`` above an integer m are treated as m, so a lift that
    lands on the window start up to round-off belongs to the window.
    """
    return math.ceil(z - tol)


def floor_half_open(z: float, tol: float = _TOL) -> int:
    """The unique integer i with z in [i, i + 1), snapping z within ``tol`` below an integer up."""
    return math.floor(z + tol)


def unit_increment(d: float) -> float:
    """Representative of the displacement d in [0, 1).

    The discontinuous lift of a circle map moves every point forward by
    less than one turn; tiny negative displacements stay strictly below 1.
    """
    increment = d - math.floor(d)
    if increment >= 1.0:
        return _BELOW_ONE
    return increment
