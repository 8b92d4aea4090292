import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

from .enums import ExitCode

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Outcome of one subcommand: stdout text, stderr message and exit code."""

    exit_code: ExitCode
    output: str = ""
    message: Optional[str] = None

    @property
    def success(self) -> bool:
        return self.exit_code == ExitCode.OK

    @classmethod
    def success_result(cls, output: str = "", message: Optional[str] = None) -> "CommandResult":
        return cls(exit_code=ExitCode.OK, output=output, message=message)

    @classmethod
    def error_result(
        cls, message: str, exit_code: ExitCode = ExitCode.VALIDATION, output: str = ""
    ) -> "CommandResult":
        return cls(exit_code=exit_code, output=output, message=message)


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags=flags, options=options)


@dataclass
class CommandDefinition:
    name: str
    description: str
    function: Callable[[argparse.Namespace], CommandResult]
    arguments: List[Argument]

    @property
    def path(self) -> List[str]:
        return self.name.split()


class CommandRegistry:
    """Subcommands keyed by their space-separated path ('keygen', 'sim run')."""

    def __init__(self):
        self.commands: Dict[str, CommandDefinition] = {}

    def register_command(
        self,
        func: Callable[[argparse.Namespace], CommandResult],
        name: Optional[str] = None,
        description: Optional[str] = None,
        arguments: Optional[List[Argument]] = None,
    ) -> None:
        command_name = name or func.__name__.replace("_", " ")
        command_description = description or (func.__doc__ or "").strip() or f"Run {command_name}"
        self.commands[command_name] = CommandDefinition(
            name=command_name,
            description=command_description.splitlines()[0],
            function=func,
            arguments=list(arguments or []),
        )

    def build_parser(
        self, prog: str = "crledger", parser_class: Type[argparse.ArgumentParser] = argparse.ArgumentParser
    ) -> argparse.ArgumentParser:
        parser = parser_class(prog=prog, description="Commit-reveal ledger toolkit")
        groups: Dict[Tuple[str, ...], Any] = {
            (): parser.add_subparsers(dest="command", metavar="<command>", required=True)
        }

        for command in sorted(self.commands.values(), key=lambda c: c.name):
            *parents, leaf = command.path
            for depth in range(len(parents)):
                key = tuple(parents[: depth + 1])
                if key not in groups:
                    group_parser = groups[key[:-1]].add_parser(key[-1], help=f"{key[-1]} commands")
                    groups[key] = group_parser.add_subparsers(
                        dest=f"{'_'.join(key)}_command", metavar="<command>", required=True
                    )
            sub = groups[tuple(parents)].add_parser(
                leaf, help=command.description, description=command.description
            )
            for argument in command.arguments:
                sub.add_argument(*argument.flags, **argument.options)
            sub.set_defaults(_command=command.name)
        return parser

    def call_command(self, args: argparse.Namespace) -> CommandResult:
        name = getattr(args, "_command", None)
        if name not in self.commands:
            raise ValueError(f"Command '{name}' not found")
        logger.debug(f"Running command '{name}'")
        return self.commands[name].function(args)


# Global command registry instance (singleton pattern)
command_registry = CommandRegistry()
