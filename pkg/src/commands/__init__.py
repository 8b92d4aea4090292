"""Subcommand implementations registered in the command registry."""

from .cost import register_cost_commands
from .keys import register_key_commands
from .ledger import register_ledger_commands
from .sim import register_sim_commands


def register_all_commands() -> None:
    register_key_commands()
    register_ledger_commands()
    register_sim_commands()
    register_cost_commands()


__all__ = [
    "register_all_commands",
    "register_cost_commands",
    "register_key_commands",
    "register_ledger_commands",
    "register_sim_commands",
]
