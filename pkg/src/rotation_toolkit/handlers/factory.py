from rotation_toolkit.domain.types import Command
from rotation_toolkit.handlers.base import CommandHandler
from rotation_toolkit.handlers.commands import (
    CompareHandler,
    Cor33Handler,
    ErgodicCheckHandler,
    NonuniformHandler,
    NsCounterexampleHandler,
    OrbitHandler,
    RhoHandler,
    SamplingHandler,
    SdeRotHandler,
    StaircaseHandler,
)

_HANDLERS: dict[Command, type[CommandHandler]] = {
    Command.RHO: RhoHandler,
    Command.ORBIT: OrbitHandler,
    Command.NONUNIFORM: NonuniformHandler,
    Command.ERGODIC_CHECK: ErgodicCheckHandler,
    Command.COMPARE: CompareHandler,
    Command.STAIRCASE: StaircaseHandler,
    Command.COR33: Cor33Handler,
    Command.SDE_ROT: SdeRotHandler,
    Command.SAMPLING: SamplingHandler,
    Command.NS_COUNTEREXAMPLE: NsCounterexampleHandler,
}


class CommandHandlerFactory:
    """
    Factory class for creating the handler of an experiment command
    """
    @staticmethod
    def create_handler(command : Command) -> CommandHandler:
        """
        Create a handler for the command.

        Args:
            command (Command): The experiment command.

        Returns:
            CommandHandler: An instance of the matching handler.
        """
        try:
            return _HANDLERS[command]()
        except KeyError:
            raise ValueError(f"Unsupported command: {command}")
