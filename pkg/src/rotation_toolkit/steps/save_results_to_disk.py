from pathlib import Path

from typing_extensions import Annotated
from zenml import get_step_context, step

from rotation_toolkit.domain.results import ExperimentResult
from rotation_toolkit.domain.types import OutputFormat
from rotation_toolkit.settings import settings


@step
def save_results_to_disk(
    result: Annotated[ExperimentResult, "result"],
    output_dir: Path,
    file_stem: str,
    output_format: OutputFormat = OutputFormat.CSV,
) -> Annotated[str, "output"]:
    path = result.write(
        output_dir / f"{file_stem}.{output_format.value}",
        output_format,
        settings.CSV_SIGNIFICANT_DIGITS,
    )

    step_context = get_step_context()
    step_context.add_output_metadata(
        output_name="output",
        metadata={
            "count": len(result.records),
            "output_dir": str(output_dir),
        },
    )

    return str(path)
