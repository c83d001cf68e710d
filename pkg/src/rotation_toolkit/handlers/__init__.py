from .dispatcher import ExperimentDispatcher
from .factory import CommandHandlerFactory

__all__ = ["CommandHandlerFactory", "ExperimentDispatcher"]
