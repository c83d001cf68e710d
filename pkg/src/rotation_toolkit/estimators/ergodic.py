import math

import numpy as np
from loguru import logger

from rotation_toolkit.circle.lifts import deviation_at
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import IdentityCheck
from rotation_toolkit.domain.types import Stream
from rotation_toolkit.errors import UnsupportedModelError
from rotation_toolkit.estimators.rotation import lift_orbit
from rotation_toolkit.estimators.statistics import batch_means_se, empirical_measure
from rotation_toolkit.systems.models import RandomSystem
from rotation_toolkit.systems.rng import stream_generator


def ergodic_formula_check(
    system: RandomSystem,
    params: LiftParams,
    n_measure: int,
    n_fresh: int,
    bins: int,
) -> IdentityCheck:
    """
    Compare the Birkhoff estimate of rho_{q,alpha} with E integral of delta d(nu).

    The stationary measure nu is approximated by the occupation histogram of one
    orbit of length ``n_measure``; the cross estimate averages delta_{q,alpha}(f, s)
    over ``n_fresh`` independent maps and angles drawn from that histogram.

    Args:
        system: An i.i.d. random system.
        params: Lift parameters.
        n_measure: Orbit length for the direct estimate and the measure.
        n_fresh: Number of fresh (map, angle) pairs.
        bins: Histogram cells.

    Returns:
        lhs = direct estimate, rhs = cross estimate, with their standard errors.

    Raises:
        UnsupportedModelError: If the base is not i.i.d.
    """
    if not system.is_iid:
        raise UnsupportedModelError(
            f"ergodic formula check needs an i.i.d. base, got {system.model.kind}"
        )

    orbit = lift_orbit(system, params, 0.0, n_measure)
    direct = float(orbit.deviations.sum()) / n_measure
    measure = empirical_measure(orbit.angles, bins)

    angles = measure.sample(stream_generator(system.seed, Stream.MEASURE), n_fresh)
    values = np.fromiter(
        (deviation_at(f, params, s) for f, s in zip(system.iter_maps(n_fresh, Stream.FRESH_MAPS), angles.tolist())),
        dtype=float,
        count=n_fresh,
    )
    cross = float(values.mean())
    se_cross = float(values.std(ddof=1) / math.sqrt(n_fresh)) if n_fresh > 1 else float("nan")

    logger.info(f"Ergodic formula check: direct={direct}, cross={cross} ({bins} cells)")

    return IdentityCheck(
        lhs=direct,
        rhs=cross,
        se_lhs=batch_means_se(orbit.deviations),
        se_rhs=se_cross,
    )
