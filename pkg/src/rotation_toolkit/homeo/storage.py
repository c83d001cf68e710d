from pathlib import Path

import yaml
from loguru import logger

from rotation_toolkit.homeo.families import PiecewiseLinear


def read_piecewise_linear(path: Path) -> PiecewiseLinear:
    """
    Load a piecewise-linear circle map from a YAML file.

    The file holds ``winding`` (integer) and ``points``, a list of [x, y] pairs.
    Coordinates may be written as decimals or fractions such as "3/8"; both are
    parsed exactly before conversion to floats.

    Args:
        path: Location of the YAML file.

    Returns:
        The parsed map.
    """
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)

    pl_map = PiecewiseLinear(points=data["points"], winding=int(data.get("winding", 0)))
    logger.debug(f"Loaded piecewise-linear map with {len(pl_map.points)} knots from {path}")
    return pl_map


def write_piecewise_linear(pl_map: PiecewiseLinear, path: Path) -> None:
    # repr() of a float round-trips exactly
    data = {
        "winding": pl_map.winding,
        "points": [[repr(x), repr(y)] for x, y in pl_map.points],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(data, f, sort_keys=False)
