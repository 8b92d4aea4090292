"""Parallel fan-out over independent simulation configurations."""

import asyncio
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..services.enums import TaskStatus
from ..services.task_manager import DEFAULT_WORKERS, SweepTask, TaskManager
from ..utils.env import log_dir as default_log_dir
from .scenario import SimConfig
from .simulator import SimMetrics, run_simulation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepOutcome:
    config: SimConfig
    task: SweepTask

    @property
    def ok(self) -> bool:
        return self.task.status == TaskStatus.COMPLETED

    @property
    def metrics(self) -> Optional[SimMetrics]:
        return self.task.result if self.ok else None

    def summary_row(self) -> Dict[str, Any]:
        if self.ok:
            row = self.metrics.summary_row()
        else:
            row = {"scenario": self.config.name, "scheme": self.config.scheme.label}
        row["status"] = self.task.status.value
        row["error"] = self.task.error or ""
        return row


def _label(index: int, config: SimConfig) -> str:
    return f"{index:03d}-{config.name}-{config.scheme.label}"


async def run_sweep_async(
    configs: Sequence[SimConfig],
    workers: int = DEFAULT_WORKERS,
    log_dir: Optional[Path] = None,
) -> List[SweepOutcome]:
    manager = TaskManager(workers=workers, log_dir=log_dir or default_log_dir())
    jobs = [
        (_label(i, config), lambda config=config: run_simulation(config))
        for i, config in enumerate(configs)
    ]
    tasks = await manager.run_all(jobs)
    return [SweepOutcome(config=c, task=t) for c, t in zip(configs, tasks)]


def run_sweep(
    configs: Sequence[SimConfig],
    workers: int = DEFAULT_WORKERS,
    log_dir: Optional[Path] = None,
) -> List[SweepOutcome]:
    """Results are identical to running each configuration alone, in input order."""
    logger.info(f"Sweeping {len(configs)} configurations on {workers} workers")
    return asyncio.run(run_sweep_async(configs, workers, log_dir))
