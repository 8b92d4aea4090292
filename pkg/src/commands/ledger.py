import argparse
import logging

from ..ledger import LedgerState, export_state_yaml, load_genesis
from ..netsim import SchemeKind, SchemeUnderTest, ScenarioRunner, load_scenario
from ..services import CommandResult, arg, command_registry
from ..utils.io_utils import atomic_write

logger = logging.getLogger(__name__)


def _emit(text: str, out: str | None) -> CommandResult:
    if out:
        atomic_write(out, text)
        return CommandResult.success_result(message=f"Wrote {out}")
    return CommandResult.success_result(output=text)


def cmd_ledger_run(args: argparse.Namespace) -> CommandResult:
    """Apply a scenario script under commit-reveal and print the final ledger state."""
    config = load_scenario(args.scenario)
    if config.scheme.kind != SchemeKind.CR:
        logger.info(f"Scenario '{config.name}' names a signature scheme; running it as commit-reveal")
        config = config.with_scheme(SchemeUnderTest(kind=SchemeKind.CR))
    runner = ScenarioRunner(config)
    runner.run()
    names = {runner.auth_of(name): name for name in runner.names}
    return _emit(export_state_yaml(runner.state, names), args.out)


def cmd_ledger_genesis(args: argparse.Namespace) -> CommandResult:
    """Validate a genesis file and print the state it produces."""
    state = LedgerState.genesis(load_genesis(args.genesis))
    return _emit(export_state_yaml(state), args.out)


def register_ledger_commands() -> None:
    out = arg("--out", help="write the state export here instead of stdout")
    command_registry.register_command(
        cmd_ledger_run, name="ledger run", arguments=[arg("scenario"), out]
    )
    command_registry.register_command(
        cmd_ledger_genesis, name="ledger genesis", arguments=[arg("genesis"), out]
    )
