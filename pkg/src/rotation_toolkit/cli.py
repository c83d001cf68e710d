import sys
from pathlib import Path
from typing import Any, Callable

import click
from loguru import logger
from pydantic import ValidationError

from rotation_toolkit.config import ExperimentConfig, load_experiment_config
from rotation_toolkit.domain.types import Command, OutputFormat, SweepAxis
from rotation_toolkit.errors import ConfigurationError, HypothesisError, InvalidMapError, RotationToolkitError
from rotation_toolkit.handlers.dispatcher import ExperimentDispatcher
from rotation_toolkit.settings import settings

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_NUMERIC = 4


def _float_list(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated numbers, got '{text}'") from e


def _grid(text: str | None) -> list[float] | None:
    """``start:stop:points`` with both ends included, or a comma-separated list."""
    if text is None:
        return None
    if ":" not in text:
        return _float_list(text)
    try:
        start, stop, points = text.split(":")
        start, stop, points = float(start), float(stop), int(points)
    except ValueError as e:
        raise click.BadParameter(f"expected start:stop:points, got '{text}'") from e
    if points < 2:
        return [start]
    step = (stop - start) / (points - 1)
    return [start + i * step for i in range(points)]


def _offsets(text: str | None) -> dict[int, float] | None:
    if text is None:
        return None
    try:
        pairs = (item.split(":") for item in text.split(",") if item.strip())
        return {int(value): float(prob) for value, prob in pairs}
    except ValueError as e:
        raise click.BadParameter(f"expected value:prob pairs, got '{text}'") from e


def experiment_options(func: Callable) -> Callable:
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), help="YAML experiment file; flags override its values."),
        click.option("--fixture", type=str, help="Reference system: example1, intro, north-south, perturbed."),
        click.option("--system", type=click.Path(exists=True, dir_okay=False), help="YAML file describing a random system."),
        click.option("--start", type=int, help="0-based first map of a cyclic fixture."),
        click.option("--q", type=float, help="Anchor q."),
        click.option("--alpha", type=float, help="Window start alpha."),
        click.option("--q-prime", type=float, help="Target anchor q'."),
        click.option("--alpha-prime", type=float, help="Target window start alpha'."),
        click.option("--s0", type=float, help="Initial angle in [0, 1)."),
        click.option("--s0-list", type=str, help="Comma-separated initial angles."),
        click.option("--x0", type=float, help="Starting point of lift orbits."),
        click.option("--n", type=int, help="Number of steps or segments."),
        click.option("--n-prob", type=int, help="Map draws for cell probabilities."),
        click.option("--bins", type=int, help="Histogram cells."),
        click.option("--T", "horizon", type=float, help="Integration horizon of the SDE."),
        click.option("--dts", type=str, help="Comma-separated decreasing sampling intervals."),
        click.option("--dt", type=float, help="Sampling interval of the counterexample."),
        click.option("--dt-internal", type=float, help="Internal Brownian step for sde-rot."),
        click.option("--substeps", type=int, help="Heun steps per sampling interval."),
        click.option("--vf", "vf_spec", type=str, help="Vector field, e.g. const:a=0.7,b=0.5 or north-south."),
        click.option("--grid", type=str, help="Sweep grid start:stop:points or a comma-separated list."),
        click.option("--axis", type=click.Choice([axis.value for axis in SweepAxis]), help="Swept parameter."),
        click.option("--offsets", type=str, help="Offset distribution, e.g. 0:0.5,1:0.5."),
        click.option("--independent-streams", is_flag=True, default=None, help="Estimate each side on its own stream."),
        click.option("--seed", type=int, help="Experiment seed."),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Result file."),
        click.option("--format", "output_format", type=click.Choice([fmt.value for fmt in OutputFormat]), help="Result format."),
        click.option("--threads", type=int, help="Maximum workers of grid sweeps."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _overrides(options: dict[str, Any]) -> dict[str, Any]:
    overrides = dict(options)
    overrides["s0_list"] = _float_list(overrides.pop("s0_list"))
    overrides["dts"] = _float_list(overrides.pop("dts"))
    overrides["grid"] = _grid(overrides.pop("grid"))
    overrides["offsets"] = _offsets(overrides.pop("offsets"))
    overrides["format"] = overrides.pop("output_format")
    # an absent flag must not override a value from the file
    overrides["independent_streams"] = overrides.pop("independent_streams") or None
    return overrides


def run(config: ExperimentConfig) -> int:
    """
    Execute one experiment, write its result file and print the summaries.

    Args:
        config: The validated configuration.

    Returns:
        0 on success, 3 when a theorem hypothesis fails, 4 on a numeric
        failure and 2 for other configuration problems.
    """
    try:
        result = ExperimentDispatcher.dispatch(config)
    except HypothesisError as e:
        click.echo(f"Error: hypothesis '{e.hypothesis}' does not hold ({e.detail})", err=True)
        return EXIT_HYPOTHESIS
    except (InvalidMapError, ArithmeticError) as e:
        click.echo(f"Error: numeric failure: {e}", err=True)
        return EXIT_NUMERIC
    except (RotationToolkitError, ValueError) as e:
        # ValidationError is a ValueError too
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE

    result.write(config.output_path, config.format, settings.CSV_SIGNIFICANT_DIGITS)
    for line in result.summaries:
        click.echo(line.format())
    return EXIT_OK


def _command(command: Command) -> Callable:
    def decorator(func: Callable) -> Callable:
        @cli.command(name=command.value, help=func.__doc__)
        @experiment_options
        @click.pass_context
        def wrapper(ctx: click.Context, config_path: Path | None, **options: Any) -> None:
            try:
                config = load_experiment_config(config_path, {"command": command, **_overrides(options)})
            except (ValidationError, ConfigurationError) as e:
                click.echo(f"Error: invalid configuration for '{command}':\n{e}", err=True)
                ctx.exit(EXIT_USAGE)
            ctx.exit(run(config))
        return wrapper
    return decorator


@click.group()
@click.option("--log-level", default=None, help="Log level of the stderr sink.")
def cli(log_level: str | None) -> None:
    """Rotation numbers of random dynamical systems on the circle."""
    logger.remove()
    logger.add(sys.stderr, level=(log_level or settings.LOG_LEVEL).upper())


@_command(Command.RHO)
def rho() -> None:
    """Uniform-lift rotation number rho_{q,alpha}."""


@_command(Command.ORBIT)
def orbit() -> None:
    """Orbit rotation number OR_{s0}."""


@_command(Command.NONUNIFORM)
def nonuniform() -> None:
    """Rotation number of a lift with random integer offsets."""


@_command(Command.ERGODIC_CHECK)
def ergodic_check() -> None:
    """Direct estimate against the stationary-measure formula."""


@_command(Command.COMPARE)
def compare() -> None:
    """Comparison formula between two (q, alpha) choices."""


@_command(Command.STAIRCASE)
def staircase() -> None:
    """Staircase levels and cell probabilities over a q' or alpha' grid."""


@_command(Command.COR33)
def cor33() -> None:
    """Orbit rotation number against rho and the deviation cells."""


@_command(Command.SDE_ROT)
def sde_rot() -> None:
    """Rotation number of a Stratonovich flow, direct and by formula."""


@_command(Command.SAMPLING)
def sampling() -> None:
    """rho of the time-delta_t discretisation along a ladder of intervals."""


@_command(Command.NS_COUNTEREXAMPLE)
def ns_counterexample() -> None:
    """Orbit rotation numbers of a discretised deterministic flow."""


if __name__ == "__main__":
    cli()
