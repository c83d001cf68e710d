from loguru import logger

from rotation_toolkit.config import ExperimentConfig
from rotation_toolkit.domain.results import ExperimentResult
from rotation_toolkit.handlers.factory import CommandHandlerFactory


class ExperimentDispatcher:
    """Dispatches experiment configurations to the handler of their command."""

    @classmethod
    def dispatch(cls, config: ExperimentConfig) -> ExperimentResult:
        """Route the configuration to its command handler.

        Args:
            config: The experiment configuration

        Returns:
            The result of the command

        Raises:
            RotationToolkitError: Whatever the handler raised, after logging it
        """
        handler = CommandHandlerFactory.create_handler(config.command)
        try:
            result = handler.handle(config)
        except Exception as e:
            logger.error(f"Error running '{config.command}': {e}")
            raise

        logger.info(f"Command '{config.command}' finished with {len(result.records)} records")
        return result
