from pathlib import Path
from datetime import datetime as dt
import click

from rotation_toolkit.pipelines.rotation_experiments import rotation_experiments_pipeline


@click.command()
@click.option(
    "--no-cache", is_flag=True, default=False, help="Disable caching for the pipeline run."
)
@click.option(
    "--config", "config_path", default="configs/rotation_experiments.yaml", help="ZenML run configuration."
)
def main(no_cache: bool, config_path: str):
    pipeline_args = {
        "enable_cache": not no_cache,
        "config_path": Path(config_path),
        "run_name": f"rotation_experiments_run_{dt.now().strftime('%Y_%m_%d_%H_%M_%S')}"
    }

    rotation_experiments_pipeline.with_options(**pipeline_args)()


if __name__ == "__main__":
    main()
