from typing import Any

from typing_extensions import Annotated
from zenml import get_step_context, step

from rotation_toolkit.config import ExperimentConfig
from rotation_toolkit.domain.results import ExperimentResult
from rotation_toolkit.handlers.dispatcher import ExperimentDispatcher


@step
def run_experiment(experiment: dict[str, Any]) -> Annotated[ExperimentResult, "result"]:
    config = ExperimentConfig.model_validate(experiment)
    result = ExperimentDispatcher.dispatch(config)

    step_context = get_step_context()
    step_context.add_output_metadata(
        output_name="result",
        metadata={
            "command": config.command.value,
            "seed": config.effective_seed,
            "count": len(result.records),
        },
    )

    return result
