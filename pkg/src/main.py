"""
Command-line entry point.
"""

import logging
import sys

from src.cli.commands import run_command
from src.config import get_settings

settings = get_settings()

# Reports go to stdout; logs stay on stderr
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper(), logging.WARNING),
    format="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    stream=sys.stderr,
    force=True,
)

# Reduce numeric library noise
logging.getLogger("sympy").setLevel(logging.WARNING)
logging.getLogger("matplotlib").setLevel(logging.WARNING)


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
