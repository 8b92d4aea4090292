import logging
import sys
from typing import List, Optional

from .handlers import dispatch
from .utils.env import CRLEDGER_LOG_LEVEL

logging.basicConfig(
    level=CRLEDGER_LOG_LEVEL,
    stream=sys.stderr,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
