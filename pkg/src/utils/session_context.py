"""Run context for passing a per-run logger down to simulation code."""

import json
import logging
from contextvars import ContextVar
from pathlib import Path
from typing import Any, Optional

# Context variable to store the run logger
_run_logger: ContextVar[Optional[logging.Logger]] = ContextVar("run_logger", default=None)


def get_run_logger() -> Optional[logging.Logger]:
    return _run_logger.get()


def set_run_logger(logger: Optional[logging.Logger]) -> None:
    _run_logger.set(logger)


def setup_file_logging(run_id: str, log_dir: Path) -> logging.Logger:
    """Logger that writes one run's records to ``<log_dir>/<run_id>.log``."""
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / f"{run_id}.log"

    run_logger = logging.getLogger(f"crledger.run.{run_id}")
    run_logger.setLevel(logging.DEBUG)
    run_logger.propagate = False
    for handler in list(run_logger.handlers):
        run_logger.removeHandler(handler)
        handler.close()

    file_handler = logging.FileHandler(log_file, mode="w", encoding="utf-8")
    file_handler.setFormatter(
        logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
    )
    run_logger.addHandler(file_handler)
    return run_logger


def close_run_logger(run_logger: logging.Logger) -> None:
    for handler in list(run_logger.handlers):
        run_logger.removeHandler(handler)
        handler.close()


def log_payload(message: str, payload: Any = None) -> None:
    """Log payload to both the module logger and the run logger if one is active."""
    if payload is not None:
        try:
            json_str = json.dumps(payload, indent=2, default=str, sort_keys=True)
            full_message = f"{message}\n   payload: {json_str}"
        except (TypeError, ValueError):
            full_message = f"{message}\n   payload: {payload!r}"
    else:
        full_message = message

    logger = logging.getLogger(__name__)
    logger.debug(full_message)

    run_logger = get_run_logger()
    if run_logger:
        run_logger.info(full_message)
