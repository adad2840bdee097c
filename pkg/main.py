"""
k-strong induced arboricity toolkit - command-line runner

Delegates to src.cli.app.main; see `python main.py --help`.
"""

import sys

from src.cli.app import main


if __name__ == "__main__":
    sys.exit(main())
