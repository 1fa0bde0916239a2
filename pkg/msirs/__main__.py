import sys

from msirs.sim.cli import main

sys.exit(main())
