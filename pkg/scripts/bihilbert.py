import sys

from cli import main


if __name__ == "__main__":
    # see `python scripts/bihilbert.py --help` for the subcommands
    sys.exit(main())
