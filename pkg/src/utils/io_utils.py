import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Union

logger = logging.getLogger(__name__)

SECRET_MODE = 0o600


@dataclass(frozen=True)
class OutputFile:
    path: Union[str, Path]
    content: Union[str, bytes]
    mode: int = 0o644


def _unlink(name: Union[str, Path]) -> None:
    try:
        os.unlink(name)
    except FileNotFoundError:
        pass


def _stage(output: OutputFile) -> str:
    path = Path(output.path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = output.content.encode("utf-8") if isinstance(output.content, str) else output.content
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
            f.flush()
            os.fsync(f.fileno())
        os.chmod(tmp_name, output.mode)
    except BaseException:
        _unlink(tmp_name)
        raise
    return tmp_name


def atomic_write_all(outputs: Sequence[OutputFile]) -> List[Path]:
    """Write several files so that either all of them appear or none do.

    Every file is staged as a sibling temp file first; only when all staged
    writes succeeded are they moved into place. A failure removes the temp
    files and any target already replaced in this call.
    """
    staged: List[str] = []
    placed: List[Path] = []
    try:
        for output in outputs:
            staged.append(_stage(output))
        for output, tmp_name in zip(outputs, staged):
            os.replace(tmp_name, output.path)
            placed.append(Path(output.path))
    except BaseException:
        for tmp_name in staged:
            _unlink(tmp_name)
        for path in placed:
            _unlink(path)
        raise
    for path in placed:
        logger.debug(f"Wrote {path}")
    return placed


def atomic_write(path: Union[str, Path], content: Union[str, bytes], mode: int = 0o644) -> Path:
    """Write ``content`` to ``path`` through a sibling temp file and ``os.replace``.

    Readers never observe a partially written file; on failure the temp file
    is removed and ``path`` is left untouched.
    """
    return atomic_write_all([OutputFile(path, content, mode)])[0]


def write_secret(path: Union[str, Path], content: str) -> Path:
    """Atomic write readable by the owner only."""
    return atomic_write(path, content, mode=SECRET_MODE)
