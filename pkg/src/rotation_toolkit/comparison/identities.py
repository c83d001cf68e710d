import math

import numpy as np
from loguru import logger

from rotation_toolkit.comparison.crossings import crossing_stats
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import IdentityCheck
from rotation_toolkit.estimators.orbit import orbit_pass
from rotation_toolkit.estimators.rotation import rho_estimate
from rotation_toolkit.estimators.statistics import batch_means_se
from rotation_toolkit.systems.models import RandomSystem


def verify_prop_2_8(
    system: RandomSystem,
    base: LiftParams,
    target: LiftParams,
    n_rho: int,
    n_prob: int,
    independent_streams: bool = False,
    x0: float = 0.0,
) -> IdentityCheck:
    """
    Check rho_{q',alpha'} = rho_{q,alpha} + P(A_k) - P(B_l) - k + l.

    With shared streams (default) both rotation numbers and the cell
    probabilities are computed on the same maps, and the identity holds
    pathwise when n_prob == n_rho. Independent streams give an honest
    Monte Carlo comparison.

    Args:
        system: The random system.
        base: Parameters (q, alpha).
        target: Parameters (q', alpha').
        n_rho: Steps of each rotation-number estimate.
        n_prob: Map draws for P(A_k) and P(B_l).
        independent_streams: Estimate each ingredient on its own stream.
        x0: Starting point of both lift orbits.

    Returns:
        lhs = estimated rho_{q',alpha'}, rhs = the comparison formula.
    """
    lhs_system = system.spawn(1) if independent_streams else system
    prob_system = system.spawn(2) if independent_streams else system

    lhs = rho_estimate(lhs_system, target, x0, n_rho)
    rho_base = rho_estimate(system, base, x0, n_rho)
    stats = crossing_stats(prob_system, base, target, n_prob)

    p_a = stats.prob_a_k
    p_b = stats.prob_b_l
    rhs = rho_base.value + p_a - p_b - stats.k + stats.l
    se_rhs = math.sqrt(rho_base.se_proxy ** 2 + (p_a * (1.0 - p_a) + p_b * (1.0 - p_b)) / n_prob)

    check = IdentityCheck(
        lhs=lhs.value,
        rhs=rhs,
        se_lhs=lhs.se_proxy,
        se_rhs=se_rhs,
        extras={"k": stats.k, "l": stats.l, "prob_a_k": p_a, "prob_b_l": p_b},
    )
    logger.info(f"Comparison of ({base.q},{base.alpha}) -> ({target.q},{target.alpha}): residual {check.residual}")
    return check


def _deviation_partition(system: RandomSystem, params: LiftParams, s0: float, n: int):
    orbit = orbit_pass(system, s0, n, params)
    deviations = orbit.deviations
    orbit_value = (orbit.gammas[-1] - s0) / n
    rho = float(deviations.sum()) / n
    return orbit, deviations, orbit_value, rho


def verify_cor_3_3(system: RandomSystem, params: LiftParams, s0: float, n: int) -> IdentityCheck:
    """
    Check OR = rho - k w0 - (k+1) w1 - (k+2) w2 along one skew orbit.

    k = floor((alpha - q) - 1) and w0, w1, w2 are the occupation frequencies of
    delta_{q,alpha} in (k, k+1), [k+1, k+2) and [k+2, k+3) at the visited points.

    Args:
        system: The random system.
        params: Lift parameters.
        s0: Initial angle.
        n: Orbit length.

    Returns:
        lhs = OR estimate, rhs = the comparison formula on the same orbit.
    """
    orbit, deviations, orbit_value, rho = _deviation_partition(system, params, s0, n)

    k = math.floor((params.alpha - params.q) - 1.0)
    levels = np.floor(deviations).astype(np.int64)
    weights = [float(np.mean(levels == k + j)) for j in range(3)]
    rhs = rho - k * weights[0] - (k + 1) * weights[1] - (k + 2) * weights[2]

    # for alpha - q off the integers, delta can also reach [k + 3, k + 4)
    outside = levels > k + 2
    if outside.any():
        logger.warning(f"{outside.mean():.3g} of the deviations lie in [k + 3, k + 4) for k={k}; corrected with level k + 3")
        rhs -= (k + 3) * float(outside.mean())

    return IdentityCheck(
        lhs=orbit_value,
        rhs=rhs,
        se_lhs=batch_means_se(orbit.increments),
        se_rhs=batch_means_se(deviations - levels),
        extras={"k": k, "w0": weights[0], "w1": weights[1], "w2": weights[2], "rho": rho},
    )


def verify_cor_3_3_origin(system: RandomSystem, s0: float, n: int) -> IdentityCheck:
    """OR = rho_{0,0} + freq(delta < 0) - freq(delta >= 1), the (q, alpha) = (0, 0) form."""
    orbit, deviations, orbit_value, rho = _deviation_partition(system, LiftParams(q=0.0, alpha=0.0), s0, n)

    below = float(np.mean(deviations < 0.0))
    above = float(np.mean(deviations >= 1.0))

    return IdentityCheck(
        lhs=orbit_value,
        rhs=rho + below - above,
        se_lhs=batch_means_se(orbit.increments),
        se_rhs=batch_means_se(deviations),
        extras={"below": below, "above": above, "rho": rho},
    )
