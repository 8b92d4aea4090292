import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment files in fallback order.
# Existing shell environment variables are never overridden.
_PROJECT_ROOT = Path(__file__).resolve().parents[2]
for _env_file in (".env", ".env.local"):
    _env_path = _PROJECT_ROOT / _env_file
    if _env_path.exists():
        load_dotenv(dotenv_path=_env_path, override=False)

DEFAULT_CONFIG_DIR = _PROJECT_ROOT / "config"


def config_dir() -> Path:
    """Directory holding catalog.yaml, genesis and scenario files.

    Read on every call so tests and sweeps can repoint it through the environment.
    """
    return Path(os.getenv("CRLEDGER_CONFIG_DIR", str(DEFAULT_CONFIG_DIR)))


def log_dir() -> Path | None:
    value = os.getenv("CRLEDGER_LOG_DIR")
    return Path(value) if value else None


CRLEDGER_HASH_ALG = os.getenv("CRLEDGER_HASH_ALG", "sha256")
CRLEDGER_LOG_LEVEL = os.getenv("CRLEDGER_LOG_LEVEL", "INFO").upper()
