from enum import Enum, IntEnum


class TaskStatus(str, Enum):
    PENDING = "pending"
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    VALIDATION = 2
    INTERNAL = 3
