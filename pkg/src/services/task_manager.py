import asyncio
import logging
import uuid
from contextvars import ContextVar, copy_context
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..utils.session_context import close_run_logger, set_run_logger, setup_file_logging
from .enums import TaskStatus

logger = logging.getLogger(__name__)

DEFAULT_WORKERS = 4


@dataclass
class SweepTask:
    task_id: str
    label: str
    status: TaskStatus
    created_at: datetime
    updated_at: datetime
    result: Optional[Any] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "task_id": self.task_id,
            "label": self.label,
            "status": self.status.value,
            "created_at": self.created_at.isoformat(),
            "updated_at": self.updated_at.isoformat(),
            "error": self.error,
        }


_current_task_id: ContextVar[Optional[str]] = ContextVar("current_task_id", default=None)


def get_current_task_id() -> Optional[str]:
    return _current_task_id.get()


def set_current_task_id(task_id: str) -> None:
    _current_task_id.set(task_id)


def _now() -> datetime:
    return datetime.now(timezone.utc)


class TaskManager:
    """Runs independent jobs on worker threads and tracks their status.

    Jobs share no state; each receives its own context copy so per-run
    loggers never leak between them.
    """

    def __init__(self, workers: int = DEFAULT_WORKERS, log_dir: Optional[Path] = None):
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        self.log_dir = log_dir
        self._tasks: Dict[str, SweepTask] = {}

    def create_task(self, label: str) -> SweepTask:
        now = _now()
        task = SweepTask(
            task_id=str(uuid.uuid4()),
            label=label,
            status=TaskStatus.PENDING,
            created_at=now,
            updated_at=now,
        )
        self._tasks[task.task_id] = task
        logger.debug(f"Created task {task.task_id} ({label})")
        return task

    def get_task(self, task_id: str) -> Optional[SweepTask]:
        return self._tasks.get(task_id)

    def update_task_status(
        self,
        task_id: str,
        status: TaskStatus,
        result: Optional[Any] = None,
        error: Optional[str] = None,
    ) -> None:
        task = self._tasks.get(task_id)
        if task:
            task.status = status
            task.updated_at = _now()
            if result is not None:
                task.result = result
            if error is not None:
                task.error = error
            logger.debug(f"Updated task {task_id} status to {status.value}")

    def _run_job(self, task: SweepTask, job: Callable[[], Any]) -> Any:
        set_current_task_id(task.task_id)
        run_logger = None
        if self.log_dir is not None:
            run_logger = setup_file_logging(f"{task.label}-{task.task_id[:8]}", self.log_dir)
            set_run_logger(run_logger)
        try:
            return job()
        finally:
            if run_logger is not None:
                close_run_logger(run_logger)
                set_run_logger(None)

    async def _process(
        self, task: SweepTask, job: Callable[[], Any], limiter: asyncio.Semaphore
    ) -> None:
        async with limiter:
            self.update_task_status(task.task_id, TaskStatus.PROCESSING)
            try:
                ctx = copy_context()
                result = await asyncio.to_thread(ctx.run, self._run_job, task, job)
                self.update_task_status(task.task_id, TaskStatus.COMPLETED, result=result)
            except Exception as e:
                logger.error(f"Task {task.label} failed: {e}")
                self.update_task_status(task.task_id, TaskStatus.FAILED, error=str(e))

    async def run_all(self, jobs: Sequence[Tuple[str, Callable[[], Any]]]) -> List[SweepTask]:
        """Run (label, job) pairs with at most `workers` in flight; results keep input order."""
        limiter = asyncio.Semaphore(self.workers)
        tasks = [self.create_task(label) for label, _ in jobs]
        await asyncio.gather(
            *(self._process(task, job, limiter) for task, (_, job) in zip(tasks, jobs))
        )
        counts = self.get_task_count()
        logger.info(
            f"Sweep finished: {counts[TaskStatus.COMPLETED.value]} completed, "
            f"{counts[TaskStatus.FAILED.value]} failed"
        )
        return tasks

    def get_task_count(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in TaskStatus}
        for task in self._tasks.values():
            counts[task.status.value] += 1
        return counts
