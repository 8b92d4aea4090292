"""Command registry and sweep task management."""

from .command_registry import (
    Argument,
    CommandDefinition,
    CommandRegistry,
    CommandResult,
    arg,
    command_registry,
)
from .enums import ExitCode, TaskStatus
from .task_manager import SweepTask, TaskManager

__all__ = [
    "Argument",
    "CommandDefinition",
    "CommandRegistry",
    "CommandResult",
    "arg",
    "command_registry",
    "ExitCode",
    "TaskStatus",
    "SweepTask",
    "TaskManager",
]
