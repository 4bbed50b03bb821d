import sys

from clustervuln.cli_harness import main

sys.exit(main())
