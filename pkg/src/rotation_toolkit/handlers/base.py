from abc import ABC, abstractmethod

from rotation_toolkit.config import ExperimentConfig
from rotation_toolkit.domain.results import ExperimentResult


class CommandHandler(ABC):
    """Base abstract class for all experiment command handlers."""

    @abstractmethod
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        """
        Run the command described by the configuration.

        Args:
            config: The validated experiment configuration

        Returns:
            The records and summary lines of the run
        """
        pass
