import sys

from quiver_rank.cli.commands import main


if __name__ == '__main__':
    sys.exit(main())
