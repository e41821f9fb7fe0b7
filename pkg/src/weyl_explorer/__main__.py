"""Allow ``python -m weyl_explorer``."""
import sys

from weyl_explorer.cli.main import main

sys.exit(main())
