import sys

from hirzcusp.cli import main

sys.exit(main())
