import sys

from symwasm.cli import main

sys.exit(main())
