from .run_experiment import run_experiment
from .save_results_to_disk import save_results_to_disk

__all__ = ["run_experiment", "save_results_to_disk"]
