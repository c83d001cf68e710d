from pathlib import Path
from typing import Any

from loguru import logger
from zenml import pipeline

from rotation_toolkit.domain.types import OutputFormat
from rotation_toolkit.steps.run_experiment import run_experiment
from rotation_toolkit.steps.save_results_to_disk import save_results_to_disk


@pipeline
def rotation_experiments_pipeline(
    experiments: list[dict[str, Any]],
    output_dir: Path,
    output_format: OutputFormat = OutputFormat.CSV,
) -> None:
    """
    A pipeline that runs a batch of rotation-number experiments and stores their tables.
    Args:
        experiments (list[dict]) : ExperimentConfig mappings, one per step pair.
        output_dir (Path) : Directory for the result files.
        output_format (OutputFormat) : csv or json.
    """
    output_dir.mkdir(parents=True, exist_ok=True)

    for index, experiment in enumerate(experiments):
        command = experiment["command"]
        logger.info(f"Scheduling experiment {index}: {command}")

        result = run_experiment(experiment=experiment)

        save_results_to_disk(
            result=result,
            output_dir=output_dir,
            file_stem=f"{index:02d}_{command}",
            output_format=output_format,
        )
