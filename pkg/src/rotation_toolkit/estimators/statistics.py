import math

import numpy as np
from loguru import logger

from rotation_toolkit.domain.reports import EmpiricalMeasure


def batch_means_se(samples: np.ndarray) -> float:
    """
    Batch-means standard error of the mean of a (possibly correlated) series.

    Uses b = ceil(sqrt(n)) batches of equal length; the tail that does not fill
    a batch is dropped. Heuristic for non-i.i.d. bases.

    Args:
        samples: The per-step values whose mean is being estimated.

    Returns:
        sqrt(var(batch means) / b), or nan when fewer than two full batches exist.
    """
    x = np.asarray(samples, dtype=float)
    n = x.size
    batches = math.ceil(math.sqrt(n)) if n else 0
    size = n // batches if batches else 0
    if batches < 2 or size < 1:
        return float("nan")
    dropped = n - batches * size
    if dropped:
        logger.warning(f"Batch means over {batches} batches of {size} drop the last {dropped} of {n} samples")
    means = x[: batches * size].reshape(batches, size).mean(axis=1)
    return float(math.sqrt(np.var(means, ddof=1) / batches))


def empirical_measure(angles: np.ndarray, bins: int) -> EmpiricalMeasure:
    """Occupation measure of a sequence of angles in [0, 1) on ``bins`` equal cells."""
    angles = np.asarray(angles, dtype=float)
    if angles.size == 0:
        raise ValueError("cannot build an occupation measure from an empty orbit")
    cells = np.minimum((angles * bins).astype(np.int64), bins - 1)
    counts = np.bincount(cells, minlength=bins)
    return EmpiricalMeasure(bins=bins, weights=tuple((counts / angles.size).tolist()))
