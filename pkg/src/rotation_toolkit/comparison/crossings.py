from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from loguru import logger
from tqdm import tqdm

from rotation_toolkit.circle.arithmetic import ceil_half_open, floor_half_open
from rotation_toolkit.circle.lifts import lift_shift
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import CrossingStats, EstimateReport, StaircaseRow
from rotation_toolkit.domain.types import SweepAxis
from rotation_toolkit.errors import ConfigurationError
from rotation_toolkit.estimators.rotation import rho_estimate
from rotation_toolkit.settings import settings
from rotation_toolkit.systems.models import RandomSystem

_RARE_COUNT = 10


def crossing_stats(system: RandomSystem, base: LiftParams, target: LiftParams, n: int) -> CrossingStats:
    """
    Estimate P(A_i) and P(B_j) from the first n maps of the base orbit.

    A_i = {F_{q,alpha'}(q') in [alpha' + i, alpha' + i + 1)},
    B_j = {F_{q,alpha}(q) in [alpha' - j, alpha' - j + 1)}.
    Values on a cell boundary belong to the cell they open.

    Args:
        system: The random system.
        base: Parameters (q, alpha).
        target: Parameters (q', alpha').
        n: Number of map draws.

    Returns:
        Frequencies of all occupied cells, and k, l as the smallest occupied indices.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")

    window_a = LiftParams(q=base.q, alpha=target.alpha)
    counts_a: Counter[int] = Counter()
    counts_b: Counter[int] = Counter()
    for f in system.iter_maps(n):
        at_target = f.lift(target.q) + lift_shift(f, window_a)
        counts_a[floor_half_open(at_target - target.alpha)] += 1
        at_anchor = f.lift(base.q) + lift_shift(f, base)
        counts_b[ceil_half_open(target.alpha - at_anchor)] += 1

    k = min(counts_a)
    l = min(counts_b)
    rare_k = counts_a[k] < _RARE_COUNT
    rare_l = counts_b[l] < _RARE_COUNT
    if rare_k or rare_l:
        logger.warning(
            f"Staircase level estimated from a rare cell (k={k}: {counts_a[k]}, l={l}: {counts_b[l]} of {n} draws)"
        )

    return CrossingStats(
        probs_a={i: c / n for i, c in sorted(counts_a.items())},
        probs_b={j: c / n for j, c in sorted(counts_b.items())},
        k=k,
        l=l,
        n_samples=n,
        rare_k=rare_k,
        rare_l=rare_l,
    )


def _staircase_point(system: RandomSystem, base: LiftParams, value: float, axis: SweepAxis, n: int) -> StaircaseRow:
    if axis == SweepAxis.Q:
        stats = crossing_stats(system, base, LiftParams(q=value, alpha=base.alpha), n)
        return StaircaseRow(grid_value=value, level=stats.k, prob=stats.prob_a_k)

    stats = crossing_stats(system, base, LiftParams(q=base.q, alpha=value), n)
    return StaircaseRow(grid_value=value, level=stats.l, prob=stats.prob_b_l)


def staircase_sweep(
    system: RandomSystem,
    base: LiftParams,
    grid: list[float],
    n: int,
    axis: SweepAxis = SweepAxis.Q,
    max_workers: int = settings.THREADS,
) -> list[StaircaseRow]:
    """
    Tabulate the staircase k(q') with P(A_k(q')), or l(alpha') with P(B_l(alpha')).

    Every grid point reuses the same map stream, so the table is monotone
    within each staircase cell without sampling noise between points.

    Args:
        system: The random system.
        base: Parameters (q, alpha) held fixed.
        grid: Strictly increasing grid of q' (or alpha') values.
        n: Map draws per grid point.
        axis: Which parameter is swept.
        max_workers: Maximum number of concurrent grid points.

    Returns:
        One row per grid point, in grid order.
    """
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigurationError(f"staircase grid must be strictly increasing, got {grid}")

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(_staircase_point, system, base, value, axis, n) for value in grid]
        rows = []
        with tqdm(total=len(futures), desc=f"Staircase over {axis.value}", disable=len(futures) < 2) as pbar:
            for future in futures:
                rows.append(future.result())
                pbar.update(1)

    logger.info(f"Staircase sweep over {len(grid)} {axis.value}-values finished (levels {rows[0].level}..{rows[-1].level})")
    return rows


def rotation_continuity_sweep(
    system: RandomSystem,
    base: LiftParams,
    q_grid: list[float],
    n: int,
    x0: float = 0.0,
) -> list[EstimateReport]:
    """rho_{q', alpha} along a q' grid on one shared stream; non-increasing in q', jumping only at atoms."""
    return [rho_estimate(system, LiftParams(q=value, alpha=base.alpha), x0, n) for value in q_grid]
