import sys

from src.cli.commands import run
from src.core import Core

if __name__ == "__main__":
    Core.init()
    sys.exit(run())
