"""
main - Entry point of the padic-bell command line
"""

import sys

from core.engine import Engine
from systems.logging import Logger

logger: Logger = Logger("main", False)


def main() -> int:
    try:
        return Engine().run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.log("Keyboard Interrupt triggered, exiting...")
        return 130


if __name__ == "__main__":
    sys.exit(main())
