import argparse
import logging
import sys
import traceback
from typing import List, Optional

from ..commands import register_all_commands
from ..errors import (
    ConfigurationError,
    CRLedgerError,
    SecurityRegressionError,
    UsageError,
    ValidationError,
)
from ..services import CommandResult, ExitCode, command_registry

logger = logging.getLogger(__name__)


class CommandArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so dispatch owns the exit code."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    register_all_commands()
    return command_registry.build_parser(prog="crledger", parser_class=CommandArgumentParser)


def _run(parser: argparse.ArgumentParser, argv: List[str]) -> CommandResult:
    try:
        args = parser.parse_args(argv)
        return command_registry.call_command(args)
    except UsageError as e:
        return CommandResult.error_result(f"{parser.format_usage()}{e}", ExitCode.USAGE)
    except SecurityRegressionError as e:
        for verdict in e.verdicts:
            logger.error(f"{verdict.kind.value} {verdict.ordering}: {', '.join(verdict.moves)}")
        return CommandResult.error_result(str(e), ExitCode.VALIDATION)
    except (ValidationError, ConfigurationError) as e:
        return CommandResult.error_result(str(e), ExitCode.VALIDATION)
    except CRLedgerError as e:
        return CommandResult.error_result(str(e), ExitCode.INTERNAL)
    except Exception as e:
        logger.error(f"Unhandled error: {e}")
        logger.debug(traceback.format_exc())
        return CommandResult.error_result(f"Internal error: {e}", ExitCode.INTERNAL)


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the subcommand and return its exit code.

    Artifacts go to stdout or the named files; usage text, errors and logs go to stderr.
    """
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        result = _run(parser, argv)
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)

    if result.output:
        sys.stdout.write(result.output)
        sys.stdout.flush()
    if result.message:
        print(result.message, file=sys.stderr)
    return int(result.exit_code)
